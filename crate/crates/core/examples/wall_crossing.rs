// Wall-crossing matrices for the torus acting with weights 2, -1, -1, and their monodromy.

use magic_windows::exact::RatVec;
use magic_windows::io::RepSpec;
use magic_windows::ktheory::wall_cross_matrix;
use magic_windows::windows::WindowModel;

pub fn run_example() -> magic_windows::Result<String> {
    let spec = RepSpec::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/skew_torus.json").as_ref())?;
    let model = WindowModel::new(&spec.full())?;
    let arr = model.delta_arrangement()?;
    let (a, b) = (RatVec::parse("1/5")?, RatVec::parse("6/5")?);
    let mut out = String::new();
    let up = wall_cross_matrix(&model, &arr, &a, &b, &RatVec::parse("1")?)?;
    let down = wall_cross_matrix(&model, &arr, &b, &a, &RatVec::parse("-1")?)?;
    out += &format!("{:?} -> {:?}, ell = 1:\n{}\n", up.source, up.target, up.matrix);
    out += &format!("{:?} -> {:?}, ell = -1:\n{}\n", down.source, down.target, down.matrix);
    let loop_ = down.compose_after(&up)?;
    out += &format!("round trip is the identity: {}\n{}\n", loop_.is_identity(), loop_.matrix);
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
