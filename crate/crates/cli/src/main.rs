// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

fn main() {
    if let Ok(n) = std::env::var(wbrst::WORKERS_ENV) {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                wbrst::configure_workers(n);
            }
            _ => {
                eprintln!("error: {} must be a positive integer, got `{n}`", wbrst::WORKERS_ENV);
                std::process::exit(wbrst_cli::EXIT_INPUT);
            }
        }
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = wbrst_cli::run_cli(std::env::args_os(), &mut out, &mut std::io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
