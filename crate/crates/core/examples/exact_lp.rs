// The dilation invariant r computed by a closed formula and by an exact simplex, side by side.

use magic_windows::exact::RatVec;
use magic_windows::io::RepSpec;
use magic_windows::ktheory::{r_of, r_of_lp};
use magic_windows::windows::WindowModel;

pub fn run_example() -> magic_windows::Result<String> {
    let spec = RepSpec::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/tsym3.json").as_ref())?;
    let model = WindowModel::new(&spec.full())?;
    let mut out = String::new();
    for v in ["2,-1", "5/2,1/3", "-3,-3", "0,0"] {
        let v = RatVec::parse(v)?;
        let (a, b) = (r_of(&model, &v)?, r_of_lp(&model, &v)?);
        out += &format!("r({v}) = {a} (simplex {b})\n");
        assert_eq!(a, b);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
