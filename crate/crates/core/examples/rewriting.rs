// Expressing a line bundle outside the window in the window basis, using Koszul relations.

use magic_windows::exact::RatVec;
use magic_windows::io::RepSpec;
use magic_windows::ktheory::{KClass, TargetWindow};
use magic_windows::windows::WindowModel;

pub fn run_example() -> magic_windows::Result<String> {
    let spec = RepSpec::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/tsym3.json").as_ref())?;
    let model = WindowModel::new(&spec.full())?;
    let delta = RatVec::parse("1/100,1/100")?;
    let ell = RatVec::parse("1,1")?;
    let target = TargetWindow::at(&model, &delta, &ell)?;
    let mut out = format!("window {:?}\n", model.window_weights(&delta, None)?);
    for chi in [[2, -1], [3, 0], [-2, -2]] {
        let rp = target.rp(&chi)?;
        let image = target.express(&KClass::single(chi.to_vec()))?;
        out += &format!("V{chi:?}: (r, p) = ({}, {}) -> {image}\n", rp.r, rp.p);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
