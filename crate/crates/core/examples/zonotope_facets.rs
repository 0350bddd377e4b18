// Facets of the weight zonotope and genericity of a stability parameter.

use magic_windows::exact::RatVec;
use magic_windows::io::RepSpec;
use magic_windows::zonotope::Zonotope;

pub fn run_example() -> magic_windows::Result<String> {
    let spec = RepSpec::load(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/tsym3.json").as_ref())?;
    let z = Zonotope::of_rep(&spec.full());
    let mut out = String::new();
    for f in z.facets()? {
        out += &format!("normal {:?} support {}\n", f.normal, f.support);
    }
    let ell = RatVec::parse("1,1")?;
    out += &format!("ell = {ell} generic: {}\n", z.is_generic(&ell)?);
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
