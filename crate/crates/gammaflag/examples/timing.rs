use gammaflag::verify;
fn main() {
    let mut all_pass = true;
    for check in verify::run_suite(verify::Suite::All) {
        all_pass &= check.pass;
        println!(
            "{} [{} ms] {} {}",
            if check.pass { "PASS" } else { "FAIL" },
            check.millis,
            check.name,
            check.detail
        );
    }
    std::process::exit(if all_pass { 0 } else { 1 });
}
