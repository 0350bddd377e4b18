// Nakajima quiver weights and the framing-free quiver Q' with its weight identity.

use magic_windows::quiver::{nakajima_weights, q_prime, q_prime_oracle, stability_generic, QuiverSpec};

pub fn run_example() -> magic_windows::Result<String> {
    let q = QuiverSpec::jordan(2);
    let spec = nakajima_weights(&q)?;
    let mut out = format!("Jordan quiver, v = 2: {} weights on {:?}\n", spec.full().weights.len(), q.v);
    let qp = q_prime(&q)?;
    let mut lhs = qp.double_weights();
    lhs.sort();
    let rhs = q_prime_oracle(&q);
    out += &format!("Q' has {} vertices and {} edges; weights match: {}\n", qp.names.len(), qp.edges.len(), lhs == rhs);
    let zeta = magic_windows::exact::RatVec::parse("1")?;
    out += &format!("zeta = 1 generic for v = 2: {}\n", stability_generic(&zeta, &q.v)?);
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
