// Window bases: lattice points of delta + nabla at a generic delta, and a half-open window on a wall.

use magic_windows::exact::RatVec;
use magic_windows::io::RepSpec;
use magic_windows::windows::WindowModel;

pub fn run_example() -> magic_windows::Result<String> {
    let spec = RepSpec::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/hilbert1.json").as_ref())?;
    let model = WindowModel::new(&spec.full())?;
    let mut out = String::new();
    for d in ["1/5", "7/10"] {
        let delta = RatVec::parse(d)?;
        out += &format!("delta = {d}: window {:?}\n", model.window_weights(&delta, None)?);
    }
    // 1/2 is a wall; the half-open window depends on the side we approach from.
    let wall = RatVec::parse("1/2")?;
    for e in ["1", "-1"] {
        let eps = RatVec::parse(e)?;
        out += &format!("delta = 1/2, eps = {e}: window {:?}\n", model.window_weights(&wall, Some(&eps))?);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
