//! Acceptance checks for `ezeta`; see `tests/acceptance.rs`.
