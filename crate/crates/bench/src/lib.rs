//! Benchmark fixtures.

use delzant_core::delzant::{make_chopped_simplex, make_cube, make_product, make_simplex};
use delzant_core::exact::{rat, ratio};
use delzant_core::DelzantPolytope;

/// Named polytopes used across the benchmarks.
pub fn fixtures() -> Vec<(&'static str, DelzantPolytope)> {
    vec![
        ("square", make_cube(2, &rat(1)).unwrap()),
        (
            "pentagon",
            make_chopped_simplex(2, &ratio(1, 10), &ratio(1, 10)).unwrap(),
        ),
        ("simplex4", make_simplex(4, &rat(1)).unwrap()),
        (
            "prism",
            make_product(
                &make_simplex(1, &rat(1)).unwrap(),
                &make_simplex(2, &rat(1)).unwrap(),
            )
            .unwrap(),
        ),
        ("cube3", make_cube(3, &rat(1)).unwrap()),
        ("cube4", make_cube(4, &rat(1)).unwrap()),
    ]
}
