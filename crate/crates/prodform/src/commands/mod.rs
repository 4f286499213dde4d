pub mod bench;
pub mod search;
pub mod threshold;
pub mod verify;

/// Run a generic function in the scalar type of a tier.
macro_rules! in_tier {
    ($tier:expr, $f:ident($($arg:expr),*)) => {
        match $tier {
            prodform_core::Tier::Double => $f::<f64>($($arg),*),
            prodform_core::Tier::DoubleDouble => $f::<prodform_core::DoubleDouble>($($arg),*),
            prodform_core::Tier::QuadDouble => $f::<prodform_core::QuadDouble>($($arg),*),
        }
    };
}
pub(crate) use in_tier;
