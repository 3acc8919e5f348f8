//! Shared inputs for the benchmarks.

use gins_core::abf::{construct, Construction, UpperPart};
use gins_core::monomial::mono;

/// The four-variable almost Borel-fixed construction with two gins.
pub fn four_variable_construction() -> Construction {
    let n = 4;
    let t = vec![mono(n, &[(1, 1), (3, 2)]), mono(n, &[(2, 2), (4, 1)])];
    construct(n, &t, &[vec![0, 1]], UpperPart::XR1).expect("valid construction")
}

/// The seven-variable construction with three gins.
pub fn seven_variable_construction() -> Construction {
    let n = 7;
    let t = vec![
        mono(n, &[(1, 1), (3, 1), (6, 2)]),
        mono(n, &[(2, 2), (3, 1), (7, 1)]),
        mono(n, &[(1, 1), (4, 2), (6, 1)]),
        mono(n, &[(2, 2), (4, 2)]),
    ];
    construct(n, &t, &[vec![0, 1], vec![2, 3]], UpperPart::XR1).expect("valid construction")
}
