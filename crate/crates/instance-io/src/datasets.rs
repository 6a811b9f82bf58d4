//! The benchmark instances shipped with the toolkit, embedded at compile
//! time.
//!
//! `dataset1` is the worked 10-individual example with its published
//! sociometric and requirement matrices; datasets 2-7 were produced with
//! [`generate_instance`](crate::generate_instance) at the benchmark family's
//! canonical shapes (see the repository README for the generation seeds).

use mtfp_core::ProblemInstance;

use crate::{parse_instance, InstanceIoError};

/// Name and document text of every shipped dataset, in benchmark order.
pub const SHIPPED: &[(&str, &str)] = &[
    ("dataset1", include_str!("../datasets/dataset1.mtfp")),
    ("dataset2", include_str!("../datasets/dataset2.mtfp")),
    ("dataset3", include_str!("../datasets/dataset3.mtfp")),
    ("dataset4", include_str!("../datasets/dataset4.mtfp")),
    ("dataset5", include_str!("../datasets/dataset5.mtfp")),
    ("dataset6", include_str!("../datasets/dataset6.mtfp")),
    ("dataset7", include_str!("../datasets/dataset7.mtfp")),
];

/// Loads a shipped dataset by name.
pub fn load_shipped(name: &str) -> Result<ProblemInstance, InstanceIoError> {
    let text = SHIPPED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| InstanceIoError::Parse {
            line: 0,
            message: format!("no shipped dataset named {name:?}"),
        })?;
    parse_instance(text)
}

/// The worked 10-individual, 4-department, 3-group example instance.
pub fn dataset1() -> ProblemInstance {
    load_shipped("dataset1").expect("embedded dataset1 must parse")
}
