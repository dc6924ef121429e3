fn main() {
    std::process::exit(lcp_certify::run());
}
