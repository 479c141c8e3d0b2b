use clap::Parser;

fn main() {
    // ISOJAC_THREADS caps the parallelism of the prime sweeps
    if let Ok(v) = std::env::var("ISOJAC_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let cli = isojac::cli::Cli::parse();
    let code = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| {
        isojac::cli::run(cli)
    })) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("internal assertion failure");
            4
        }
    };
    std::process::exit(code);
}
