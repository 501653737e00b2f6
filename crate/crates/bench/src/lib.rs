//! Inputs shared by the benchmarks.

use bstir::exact::rat;
use bstir::fps::{series_expm1_over_x, PowerSeries};
use bstir::HessenbergMatrix;

/// Lower-Hessenberg matrix with small integer entries and unit superdiagonal.
pub fn small_int_hessenberg(size: usize) -> HessenbergMatrix {
    HessenbergMatrix::from_fn(size, |i, j| match () {
        _ if j == i + 1 => rat(1),
        _ if j > i + 1 => rat(0),
        _ => rat(((i * 7 + j * 3) % 5) as i64 - 2),
    })
}

/// `(e^x - 1)/x` through `order`.
pub fn unit_series(order: usize) -> PowerSeries {
    series_expm1_over_x(order)
}
