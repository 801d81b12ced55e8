// Every bundled fixture is entered twice; the build fails unless both
// copies carry the same table.

use std::fs;
use std::path::Path;

fn body(path: &Path) -> String {
    let text = fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect()
}

fn main() {
    let dir = Path::new("fixtures");
    println!("cargo:rerun-if-changed=fixtures");
    for name in ["H3", "H4", "F4", "E6", "E7", "E8"] {
        let first = dir.join(format!("{name}.tsv"));
        let second = dir.join("second-entry").join(format!("{name}.tsv"));
        println!("cargo:rerun-if-changed={}", first.display());
        println!("cargo:rerun-if-changed={}", second.display());
        let (a, b) = (body(&first), body(&second));
        if a != b {
            let line = a
                .lines()
                .zip(b.lines())
                .position(|(x, y)| x != y)
                .map_or("length".to_string(), |i| format!("line {}", i + 1));
            panic!("fixture {name}: the two entries differ at {line}");
        }
    }
}
