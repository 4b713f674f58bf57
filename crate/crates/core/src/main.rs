fn main() {
    // Restore the default SIGPIPE disposition so piping into head or less
    // truncates output silently instead of panicking on a closed stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(qdim::cli::run());
}
