//! Built-in catalog of published product formulae and their error constants.
//!
//! Coefficients are kept as decimal strings and parsed into the requested
//! scalar type on load, so the double-double tier sees every published digit.
//! Formulae whose coefficients were never reprinted alongside the constants
//! are kept as stubs: the constants are available, the formula is not.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{from_palindrome, suzuki_first_stages, suzuki_second_stages, ProcessedFormula, StageCoefficients};
use crate::error::{Error, Result};
use crate::real::Real;

mod data;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Construction {
    SuzukiFirst(u32),
    SuzukiSecond(u32),
    Plain { w: &'static [&'static str] },
    /// Not printed; recomputed from the order conditions.
    Solved { w: &'static [&'static str] },
    Kernel { w: &'static [&'static str] },
    Processed {
        w: &'static [&'static str],
        gammas: &'static [&'static str],
    },
    Stub,
}

#[derive(Debug)]
pub(crate) struct RawEntry {
    label: &'static str,
    order: u32,
    stages: u32,
    processed: bool,
    construction: Construction,
    chi: Option<f64>,
    m_chi: Option<f64>,
    zeta: Option<f64>,
    m_zeta: Option<f64>,
    omega_d6: Option<f64>,
    omega_d4: Option<f64>,
}

/// Published constants; `None` where the source table has no value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Published {
    /// Stage count `M` used in the cost metrics.
    pub stages: u32,
    pub processed: bool,
    pub chi: Option<f64>,
    pub m_chi: Option<f64>,
    pub zeta: Option<f64>,
    pub m_zeta: Option<f64>,
    /// Fermionic eigenvalue constant for 6 orbitals at half filling.
    pub omega_d6: Option<f64>,
    /// Same for 4 orbitals.
    pub omega_d4: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CatalogFormula<T> {
    Plain(StageCoefficients<T>),
    /// A kernel published without its processor.
    Kernel(StageCoefficients<T>),
    Processed(ProcessedFormula<T>),
    Unavailable,
}

impl<T: Real> CatalogFormula<T> {
    pub fn kind(&self) -> &'static str {
        match self {
            CatalogFormula::Plain(_) => "plain",
            CatalogFormula::Kernel(_) => "kernel",
            CatalogFormula::Processed(_) => "processed",
            CatalogFormula::Unavailable => "unavailable",
        }
    }

    /// The stage weights that are repeated: the formula itself or its kernel.
    pub fn kernel(&self) -> Option<&StageCoefficients<T>> {
        match self {
            CatalogFormula::Plain(s) | CatalogFormula::Kernel(s) => Some(s),
            CatalogFormula::Processed(p) => Some(&p.kernel),
            CatalogFormula::Unavailable => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry<T> {
    pub label: String,
    pub order: u32,
    pub formula: CatalogFormula<T>,
    pub published: Published,
    pub source: String,
}

impl<T: Real> CatalogEntry<T> {
    pub fn is_stub(&self) -> bool {
        matches!(self.formula, CatalogFormula::Unavailable)
    }
}

fn parse_all<T: Real>(xs: &[&str]) -> Result<Vec<T>> {
    xs.iter().map(|s| T::parse_decimal(s)).collect()
}

fn build<T: Real>(raw: &RawEntry) -> Result<CatalogEntry<T>> {
    let label = raw.label;
    let (formula, source) = match raw.construction {
        Construction::SuzukiFirst(k) => (
            CatalogFormula::Plain(from_palindrome(&suzuki_first_stages::<T>(k)?, raw.order, label)?),
            "fractal construction, three sub-steps",
        ),
        Construction::SuzukiSecond(k) => (
            CatalogFormula::Plain(from_palindrome(&suzuki_second_stages::<T>(k)?, raw.order, label)?),
            "fractal construction, five sub-steps",
        ),
        Construction::Plain { w } => (
            CatalogFormula::Plain(StageCoefficients::from_free(&parse_all::<T>(w)?, raw.order, label)),
            "published coefficient table",
        ),
        Construction::Solved { w } => (
            CatalogFormula::Plain(StageCoefficients::from_free(&parse_all::<T>(w)?, raw.order, label)),
            "recomputed from the order conditions (coefficients not printed)",
        ),
        Construction::Kernel { w } => (
            CatalogFormula::Kernel(StageCoefficients::from_free(&parse_all::<T>(w)?, raw.order, label)),
            "published kernel (large time steps), processor not published",
        ),
        Construction::Processed { w, gammas } => {
            let kernel = StageCoefficients::from_free(&parse_all::<T>(w)?, raw.order, label);
            (
                CatalogFormula::Processed(ProcessedFormula::from_partial(kernel, &parse_all::<T>(gammas)?, raw.order)),
                "published kernel and processor",
            )
        }
        Construction::Stub => (CatalogFormula::Unavailable, "constants only"),
    };
    Ok(CatalogEntry {
        label: label.to_string(),
        order: raw.order,
        formula,
        published: Published {
            stages: raw.stages,
            processed: raw.processed,
            chi: raw.chi,
            m_chi: raw.m_chi,
            zeta: raw.zeta,
            m_zeta: raw.m_zeta,
            omega_d6: raw.omega_d6,
            omega_d4: raw.omega_d4,
        },
        source: source.to_string(),
    })
}

/// Every catalog entry, coefficients parsed into `T`.
pub fn catalog<T: Real>() -> Vec<CatalogEntry<T>> {
    data::ENTRIES
        .iter()
        .map(|r| build(r).expect("built-in catalog data parses"))
        .collect()
}

pub fn labels() -> Vec<&'static str> {
    data::ENTRIES.iter().map(|r| r.label).collect()
}

pub fn lookup<T: Real>(label: &str) -> Result<CatalogEntry<T>> {
    data::ENTRIES
        .iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
        .and_then(build)
}
