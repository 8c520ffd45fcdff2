use std::cmp::Ordering;
use std::fmt::{Debug, Display};

/// Coordinate type for interval endpoints.
///
/// Anything ordered and numeric works: the primitive integers for exact
/// inputs, `f32`/`f64` for measured geometry. Floating coordinates must not
/// be NaN; constructors reject them.
pub trait Coord: num_traits::Num + Copy + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// Total order used for sorting. Only valid on non-NaN values.
    #[inline]
    fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }

    /// Lossy conversion used by generators and reporting.
    fn to_f64(self) -> f64;
}

macro_rules! impl_coord {
    ($($t:ty),*) => {
        $(impl Coord for $t {
            #[inline]
            fn to_f64(self) -> f64 {
                self as f64
            }
        })*
    };
}

impl_coord!(i8, i16, i32, i64, i128, isize, u8, u16, u32, u64, u128, usize, f32, f64);

/// Real type used for certificate bounds.
pub trait BoundReal: num_traits::Float + Debug + Display + Send + Sync + 'static {}
impl<F: num_traits::Float + Debug + Display + Send + Sync + 'static> BoundReal for F {}
