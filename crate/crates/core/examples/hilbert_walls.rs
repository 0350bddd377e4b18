// Hilbert schemes of points: where the two wall conventions agree and where they part ways.

use magic_windows::report::hilbert;

pub fn run_example() -> magic_windows::Result<String> {
    let mut out = String::new();
    for n in 1..=3 {
        let w = hilbert(n, true)?.walls.expect("walls requested");
        out += &format!(
            "n = {n}: sigma_x {:?}, nabla {:?}, differ: {}\n",
            w.sigma_x.per_period.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            w.nabla.per_period.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            w.conventions_differ
        );
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example().expect("example runs"));
}
