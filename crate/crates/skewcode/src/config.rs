//! Resolved run configuration: field, rings, polynomials, Gray map, budgets.
//!
//! A [`CodeConfig`] is echoed into every report and can be read back to
//! repeat the run.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use skewcode_core::fqr::x_block_ring;
use skewcode_core::lincode::{DEFAULT_BUDGET, DEFAULT_ENUMERATE_LIMIT};
use skewcode_core::skewpoly::{parse_ascending, parse_compact};
use skewcode_core::{
    CodeSpec, DistanceOptions, DistanceStrategy, Error, GaloisField, GrayCoords, GrayMatrix, Result, SkewPoly, SkewRing,
};

/// Builds a field from `--field GF(p^m);modulus=...` or `--q` with an
/// optional `--modulus c0,c1,...`.
pub fn resolve_field(q: Option<u32>, descriptor: Option<&str>, modulus: Option<&str>) -> Result<Arc<GaloisField>> {
    let field = match (descriptor, q) {
        (Some(d), _) => GaloisField::from_descriptor(d)?,
        (None, Some(q)) => {
            let (p, m) =
                skewcode_core::gf::prime_power(q).ok_or_else(|| Error::Parse(format!("{q} is not a prime power")))?;
            match modulus {
                Some(list) => {
                    let coeffs = list
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad modulus coefficient `{t}`")))
                        })
                        .collect::<Result<Vec<u32>>>()?;
                    GaloisField::new(p, m, Some(&coeffs))?
                }
                None => GaloisField::new(p, m, None)?,
            }
        }
        (None, None) => return Err(Error::Parse("either --q or --field is required".into())),
    };
    Ok(Arc::new(field))
}

/// Parses a polynomial in ascending comma syntax, or the compact descending
/// notation when `compact` is set.
pub fn parse_poly(ring: &Arc<SkewRing>, s: &str, compact: bool, warnings: &mut Vec<String>) -> Result<SkewPoly> {
    if compact {
        let parsed = parse_compact(ring, s)?;
        warnings.extend(parsed.warnings);
        Ok(parsed.poly)
    } else {
        parse_ascending(ring, s)
    }
}

pub fn parse_coords(s: &str) -> Result<GrayCoords> {
    match s {
        "idempotent" => Ok(GrayCoords::Idempotent),
        "additive" => Ok(GrayCoords::Additive),
        other => Err(Error::Parse(format!(
            "unknown Gray coordinates `{other}` (idempotent|additive)"
        ))),
    }
}

pub fn coords_name(c: GrayCoords) -> &'static str {
    match c {
        GrayCoords::Idempotent => "idempotent",
        GrayCoords::Additive => "additive",
    }
}

pub fn parse_strategy(s: &str) -> Result<DistanceStrategy> {
    match s {
        "auto" => Ok(DistanceStrategy::Auto),
        "enumerate" => Ok(DistanceStrategy::Enumerate),
        "columns" | "column_dependence" => Ok(DistanceStrategy::ColumnDependence),
        other => Err(Error::Parse(format!(
            "unknown strategy `{other}` (auto|enumerate|columns)"
        ))),
    }
}

pub fn strategy_name(s: DistanceStrategy) -> &'static str {
    match s {
        DistanceStrategy::Auto => "auto",
        DistanceStrategy::Enumerate => "enumerate",
        DistanceStrategy::ColumnDependence => "columns",
    }
}

/// Distance search settings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceConfig {
    pub strategy: String,
    pub budget: u64,
    pub enumerate_limit: u64,
}

impl Default for DistanceConfig {
    fn default() -> Self {
        DistanceConfig {
            strategy: "auto".into(),
            budget: DEFAULT_BUDGET,
            enumerate_limit: DEFAULT_ENUMERATE_LIMIT,
        }
    }
}

impl DistanceConfig {
    pub fn options(&self) -> Result<DistanceOptions> {
        Ok(DistanceOptions {
            strategy: parse_strategy(&self.strategy)?,
            budget: self.budget,
            enumerate_limit: self.enumerate_limit,
            upper_bound: None,
        })
    }
}

/// Fully resolved separable code description, polynomials in canonical
/// ascending form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeConfig {
    pub field: String,
    pub theta_exp: u32,
    pub alpha: usize,
    pub beta: usize,
    pub f: String,
    pub g1: String,
    pub g2: String,
    pub gray: String,
    pub gray_coords: String,
    pub distance: DistanceConfig,
}

/// Raw polynomial inputs before resolution.
pub struct CodeInputs<'a> {
    pub field: Arc<GaloisField>,
    pub theta_exp: u32,
    pub alpha: usize,
    pub beta: usize,
    pub f: &'a str,
    pub g1: &'a str,
    pub g2: &'a str,
    pub paper_notation: bool,
    pub gray: &'a str,
    pub gray_coords: &'a str,
    pub distance: DistanceConfig,
}

/// A configuration turned back into core objects.
pub struct ResolvedCode {
    pub field: Arc<GaloisField>,
    pub spec: CodeSpec,
    pub gray: GrayMatrix,
    pub coords: GrayCoords,
    pub distance: DistanceOptions,
}

impl CodeConfig {
    pub fn from_inputs(inp: CodeInputs<'_>) -> Result<(Self, Vec<String>)> {
        let mut warnings = Vec::new();
        let xr = x_block_ring(&inp.field, inp.theta_exp, inp.alpha);
        let yr = SkewRing::new(Arc::clone(&inp.field), inp.theta_exp);
        let f = parse_poly(&xr, inp.f, inp.paper_notation, &mut warnings)?;
        let g1 = parse_poly(&yr, inp.g1, inp.paper_notation, &mut warnings)?;
        let g2 = parse_poly(&yr, inp.g2, inp.paper_notation, &mut warnings)?;
        let gray = GrayMatrix::parse(&inp.field, inp.gray)?;
        let coords = parse_coords(inp.gray_coords)?;
        inp.distance.options()?;
        Ok((
            CodeConfig {
                field: inp.field.descriptor(),
                theta_exp: inp.theta_exp,
                alpha: inp.alpha,
                beta: inp.beta,
                f: f.to_ascending(),
                g1: g1.to_ascending(),
                g2: g2.to_ascending(),
                gray: gray.tokens(&inp.field),
                gray_coords: coords_name(coords).into(),
                distance: inp.distance,
            },
            warnings,
        ))
    }

    pub fn resolve(&self) -> Result<ResolvedCode> {
        let field = Arc::new(GaloisField::from_descriptor(&self.field)?);
        let xr = x_block_ring(&field, self.theta_exp, self.alpha);
        let yr = SkewRing::new(Arc::clone(&field), self.theta_exp);
        let spec = CodeSpec::from_polys(
            Arc::clone(&field),
            self.theta_exp,
            self.alpha,
            self.beta,
            parse_ascending(&xr, &self.f)?,
            parse_ascending(&yr, &self.g1)?,
            parse_ascending(&yr, &self.g2)?,
        )?;
        Ok(ResolvedCode {
            gray: GrayMatrix::parse(&field, &self.gray)?,
            coords: parse_coords(&self.gray_coords)?,
            distance: self.distance.options()?,
            field,
            spec,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip() {
        let field = resolve_field(Some(9), None, None).unwrap();
        let (cfg, warnings) = CodeConfig::from_inputs(CodeInputs {
            field,
            theta_exp: 1,
            alpha: 49,
            beta: 36,
            f: "1w^3w^52",
            g1: "w^611",
            g2: "w^211",
            paper_notation: true,
            gray: "hadamard",
            gray_coords: "idempotent",
            distance: DistanceConfig::default(),
        })
        .unwrap();
        assert!(warnings.is_empty());
        assert_eq!(cfg.f, "2,w^5,w^3,1");
        assert_eq!(cfg.g1, "1,1,w^6");
        assert_eq!(cfg.gray, "1,1,1,2");
        assert_eq!(cfg.field, "GF(3^2);modulus=2,2,1");
        let json = serde_json::to_string(&cfg).unwrap();
        let back: CodeConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cfg);
        let r = back.resolve().unwrap();
        assert_eq!(r.spec.length(), 121);
    }

    #[test]
    fn field_resolution() {
        assert_eq!(resolve_field(Some(25), None, None).unwrap().order(), 25);
        assert_eq!(
            resolve_field(None, Some("GF(7^2);modulus=3,6,1"), None)
                .unwrap()
                .order(),
            49
        );
        assert!(resolve_field(Some(10), None, None).is_err());
        assert!(resolve_field(Some(9), None, Some("1,0,1")).is_err());
        assert!(resolve_field(None, None, None).is_err());
    }
}
