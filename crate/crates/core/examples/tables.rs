// The two catalog tables with computed spot checks.
//
// cargo run --example tables

use appell_hankel::cli::run;

pub fn run_example() -> appell_hankel::Result<()> {
    let mut out = Vec::new();
    let mut err = std::io::stderr();
    for args in [["hankel", "table", "7.1"], ["hankel", "table", "7.2"]] {
        let code = run(args, &mut out, &mut err);
        assert_eq!(code, 0);
        out.push(b'\n');
    }
    print!("{}", String::from_utf8_lossy(&out));

    let mut latex = Vec::new();
    run(["hankel", "table", "7.2", "--latex"], &mut latex, &mut err);
    println!("{}", String::from_utf8_lossy(&latex).lines().take(4).collect::<Vec<_>>().join("\n"));
    Ok(())
}

fn main() -> appell_hankel::Result<()> {
    run_example()
}
