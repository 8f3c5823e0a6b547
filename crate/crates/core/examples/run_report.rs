//! Drive the command-line surface in-process and build a report by hand.

use num_complex::Complex64;
use shiftconv::cli::{run, RunReport};

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["shiftconv", "--no-timing", "sum", "--X", "1000", "--with-main"], &mut out, &mut err);
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));

    let mut out = Vec::new();
    let code = run(["shiftconv", "--format", "csv", "sum", "--X-grid", "1e3:1e5:3"], &mut out, &mut err);
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));

    let mut r = RunReport::new("custom");
    r.param("note", "hand-built").output("z", Complex64::new(0.5, -1.0));
    r.check_at_most("defect", 1e-13, 1e-12);
    print!("{}", r.to_json(false));
}
