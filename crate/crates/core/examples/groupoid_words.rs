// Matrices of groupoid words and a congruence verification table.

use magic_windows::groupoid::{CongruenceFile, Groupoid, WordFile, FAMILIES};
use magic_windows::io::{parse_json, read, RepSpec};
use magic_windows::report;
use magic_windows::windows::WindowModel;

fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn run_example() -> magic_windows::Result<String> {
    let spec = RepSpec::load(&fixture("hilbert1.json"))?;
    let model = WindowModel::new(&spec.full())?;
    let g = Groupoid::new(&model)?;
    let word = parse_json::<WordFile>(&read(&fixture("word_hilbert1.json"))?)?.word()?;
    let m = g.word_to_matrix(&word)?;
    let mut out = format!("word of {} arrows, {:?} -> {:?}:\n{}\n", word.arrows.len(), m.source, m.target, m.matrix);

    let f = parse_json::<CongruenceFile>(&read(&fixture("verify_hilbert1.json"))?)?;
    let v = report::verify(&f)?;
    for fam in FAMILIES {
        let n = v.report.checks.iter().filter(|c| c.family == *fam).count();
        out += &format!("{fam}: {n} checks, passed {}\n", v.report.family_passed(fam));
    }
    out += &format!("all passed: {}\n", v.report.passed);
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
