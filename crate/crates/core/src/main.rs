mod cli;

use std::process::ExitCode;

use clap::Parser;

use cli::args::Cli;
use cli::commands::run;

fn configure_threads() {
    if let Some(n) = std::env::var("MAXLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let outcome = run(&cli).and_then(|out| {
        out.emit(cli.output_dir.as_ref(), cli.plot)?;
        Ok(out.passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("maxlab: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("maxlab: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
