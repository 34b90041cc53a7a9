//! Driving the command-line interface in-process.

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = hyperforge::cli::run_with(["hyperforge", "iso", "--a", "gf:3/units", "--b", "krasner"], &mut out, &mut err);
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));
    out.clear();
    let code = hyperforge::cli::run_with(["hyperforge", "check", "--table", "gf:7/3", "--format", "csv"], &mut out, &mut err);
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));
}
