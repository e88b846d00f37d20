fn main() {
    let outcomes = asphere::acceptance::run_all();
    for o in &outcomes {
        println!("{}", o.line(true));
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
