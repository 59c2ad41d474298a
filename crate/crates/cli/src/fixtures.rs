//! Instances shipped with the binary.

use crate::instance::{Instance, InstanceError};

pub const FIXTURES: &[(&str, &str)] = &[
    ("p2", include_str!("../fixtures/p2.jsonl")),
    ("k22", include_str!("../fixtures/k22.jsonl")),
    ("k23", include_str!("../fixtures/k23.jsonl")),
    ("k24", include_str!("../fixtures/k24.jsonl")),
    ("serial-join", include_str!("../fixtures/serial-join.jsonl")),
    ("facet-join", include_str!("../fixtures/facet-join.jsonl")),
    ("triangle", include_str!("../fixtures/triangle.jsonl")),
    ("four-cycle", include_str!("../fixtures/four-cycle.jsonl")),
    ("schrijver", include_str!("../fixtures/schrijver.jsonl")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load(name: &str) -> Option<Result<Instance, InstanceError>> {
    text(name).map(Instance::parse)
}
