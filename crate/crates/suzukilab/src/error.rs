//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown catalog item {0} (valid ids are 1..=17)")]
    UnknownCatalogItem(u32),

    #[error("catalog item {item}: parameter `{param}` = {value} outside {expected}")]
    ParamOutOfRange {
        item: u32,
        param: String,
        value: f64,
        expected: String,
    },

    #[error("catalog item {item}: missing parameter `{param}`")]
    MissingParam { item: u32, param: String },

    #[error("quadrature did not converge on [{a}, {b}] within {max_depth} subdivisions (tol {tol:e})")]
    QuadratureNonConvergence {
        a: f64,
        b: f64,
        tol: f64,
        max_depth: u32,
    },

    #[error("integrand returned a non-finite value at t = {t}")]
    NonFiniteIntegrand { t: f64 },

    #[error("gauge evaluation failed at distance {distance}: {source}")]
    GaugeEval {
        distance: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("distance matrix is {rows}x{cols}, expected {n}x{n} for {n} points")]
    DimensionMismatch { rows: usize, cols: usize, n: usize },

    #[error("self-map image {image} out of range for {n} points")]
    ImageOutOfRange { image: usize, n: usize },

    #[error("mapping image {label} is not a point of the space")]
    ImageNotInSpace { label: String },

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("non-finite value from {what} at t = {t}")]
    NonFiniteValue { what: String, t: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
