//! Library surface of the `skein` command: the JSON wire forms, exposed so
//! integration tests can deserialize command output and assert that
//! re-serialization reproduces it byte for byte.

pub mod wire;
