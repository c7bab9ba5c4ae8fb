//! Command-line plumbing (placeholder while the library is scaffolded).

/// Entry point used by the `young-updown` binary.
pub fn cli_main<I: IntoIterator<Item = String>>(_args: I) -> i32 {
    2
}
