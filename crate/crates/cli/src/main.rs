use std::io::Write;

use clap::Parser;

fn main() {
    let cli = polyfan_cli::Cli::parse();
    match polyfan_cli::run(&cli) {
        Ok(out) => {
            // tolerate closed pipes (e.g. `polyfan query ... | head`)
            let _ = std::io::stdout().write_all(out.as_bytes());
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
