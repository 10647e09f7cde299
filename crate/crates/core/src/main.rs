use std::io;

use hyperkernel::cli::{main_with, TOL_ENV};

fn main() {
    let env_tol = std::env::var(TOL_ENV).ok();
    let code = main_with(std::env::args_os(), env_tol.as_deref(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
