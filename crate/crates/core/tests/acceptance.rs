use gencheb::verify::acceptance_suite;
use std::process::ExitCode;

const SEED: u64 = 20_240_601;

fn main() -> ExitCode {
    let mut failed = 0;
    for c in acceptance_suite(SEED) {
        let verdict = if c.pass() { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2}: {}", c.id, c.title);
        for k in c.checks.iter().filter(|k| !k.pass) {
            let note = k.note.as_deref().unwrap_or("");
            println!("      {}: measured {:e} > tol {:e} {note}", k.name, k.measured, k.tolerance);
        }
        if !c.pass() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
