//! Holds the `acceptance` test target, which checks the library against
//! reference values. Run it with `cargo test -p knotform-verify`.
