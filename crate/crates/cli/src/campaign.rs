//! Seeded verification campaigns.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use pfkit::combinat::CLOW_BOUND;
use pfkit::identities::{
    check_c_ij, check_cayley, check_clow, check_det_via_pf, check_embedded_identity, check_mp,
    check_pad, check_padj, check_pair_product, check_pb_oracle, check_pce, check_pch,
    check_scaling, check_transpose_coeffs, check_transposition_chain,
};
use pfkit::{coincide_with_aj, Report, SkewMatrix};

use crate::gen::{trial_rng, Source};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    Pb,
    Clow,
    Pce,
    Pad,
    Mp,
    Cayley,
    Pch,
    Padj,
    Cij,
    Transpose,
    Scaling,
    Chain,
    Embed,
    Pairs,
    PairsCoincide,
}

impl Identity {
    pub const ALL: [Identity; 15] = [
        Identity::Pb,
        Identity::Clow,
        Identity::Pce,
        Identity::Pad,
        Identity::Mp,
        Identity::Cayley,
        Identity::Pch,
        Identity::Padj,
        Identity::Cij,
        Identity::Transpose,
        Identity::Scaling,
        Identity::Chain,
        Identity::Embed,
        Identity::Pairs,
        Identity::PairsCoincide,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Pb => "pb",
            Identity::Clow => "clow",
            Identity::Pce => "pce",
            Identity::Pad => "pad",
            Identity::Mp => "mp",
            Identity::Cayley => "cayley",
            Identity::Pch => "pch",
            Identity::Padj => "padj",
            Identity::Cij => "cij",
            Identity::Transpose => "transpose",
            Identity::Scaling => "scaling",
            Identity::Chain => "chain",
            Identity::Embed => "embed",
            Identity::Pairs => "pairs",
            Identity::PairsCoincide => "pairs-coincide",
        }
    }

    /// Expands a selector; `all` is every identity except the clow enumeration,
    /// which is limited to dimension 6.
    pub fn select(name: &str) -> Result<Vec<Identity>, CliError> {
        if name == "all" {
            return Ok(Identity::ALL
                .into_iter()
                .filter(|&i| i != Identity::Clow)
                .collect());
        }
        Ok(vec![name.parse()?])
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                CliError::Usage(format!(
                    "unknown identity '{s}' (expected one of: {}, all)",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone)]
pub struct Campaign {
    pub identities: Vec<Identity>,
    pub dim: usize,
    pub trials: u64,
    pub seed: u64,
    pub source: Source,
    pub oracle_bound: usize,
    /// A fixed first matrix instead of a generated one.
    pub input: Option<SkewMatrix>,
}

impl Campaign {
    /// Rejects configurations that would make a check error out or silently skip its oracle.
    pub fn validate(&self) -> Result<(), CliError> {
        let d = self.dim;
        if d < 2 || d % 2 == 1 {
            return Err(CliError::Usage(format!(
                "--dim must be even and at least 2, got {d}"
            )));
        }
        if let Some(a) = &self.input {
            if a.dim() != d {
                return Err(CliError::Usage(format!(
                    "input has dimension {}, --dim is {d}",
                    a.dim()
                )));
            }
        }
        for id in &self.identities {
            let limit = match id {
                Identity::Pb | Identity::Pairs => Some(self.oracle_bound),
                Identity::Clow => Some(CLOW_BOUND.min(self.oracle_bound)),
                _ => None,
            };
            if let Some(limit) = limit {
                if d > limit {
                    return Err(CliError::Usage(format!(
                        "{id}: dimension {d} exceeds the oracle bound {limit}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn trial_count(&self) -> u64 {
        match (&self.source, &self.input) {
            (Source::Symbolic, _) | (_, Some(_)) => 1,
            _ => self.trials,
        }
    }

    /// All reports in trial order, and within a trial in selection order.
    pub fn run(&self) -> Result<Vec<Report>, CliError> {
        self.validate()?;
        let per_trial: Vec<Result<Vec<Report>, CliError>> = (0..self.trial_count())
            .into_par_iter()
            .map(|t| self.run_trial(t))
            .collect();
        let mut out = Vec::new();
        for r in per_trial {
            out.extend(r?);
        }
        Ok(out)
    }

    fn run_trial(&self, t: u64) -> Result<Vec<Report>, CliError> {
        let seed = self.seed.wrapping_add(t);
        self.identities
            .iter()
            .map(|&id| {
                let mut r = self.run_one(id, seed)?;
                if let Source::Random { .. } = self.source {
                    r = r.with_seed(seed);
                }
                Ok(r)
            })
            .collect()
    }

    fn run_one(&self, id: Identity, seed: u64) -> Result<Report, CliError> {
        let mut rng = trial_rng(seed, id as u64);
        let d = self.dim;
        let src = &self.source;
        let a = match &self.input {
            Some(a) => a.clone(),
            None => src.skew(d, "a", &mut rng),
        };
        let report = match id {
            Identity::Pb => check_pb_oracle(&a, self.oracle_bound)?,
            Identity::Clow => check_clow(&a, CLOW_BOUND)?,
            Identity::Pce => check_pce(&a)?,
            Identity::Pad => check_pad(&a, &src.scalar("lambda", &mut rng))?,
            Identity::Mp => check_mp(&a, &src.square(d, "b", &mut rng))?,
            Identity::Cayley => check_cayley(&a)?,
            Identity::Pch => check_pch(&a)?,
            Identity::Padj => check_padj(&a)?,
            Identity::Cij => check_c_ij(&a)?,
            Identity::Transpose => check_transpose_coeffs(&a)?,
            Identity::Scaling => check_scaling(&a, &src.scalar("lambda", &mut rng))?,
            Identity::Chain => check_transposition_chain(&a)?,
            Identity::Embed => {
                let b = src.square(d / 2, "b", &mut rng);
                let ring = b.ring();
                let parts = vec![check_det_via_pf(&b)?, check_embedded_identity(d / 2)?];
                Report::combine("embed", d, ring, parts)
            }
            Identity::Pairs => {
                check_pair_product(&a, &src.skew(d, "b", &mut rng), self.oracle_bound)?
            }
            Identity::PairsCoincide => coincide_with_aj(&a)?,
        };
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfkit::Ring;

    fn campaign(ids: &str, dim: usize) -> Campaign {
        Campaign {
            identities: Identity::select(ids).unwrap(),
            dim,
            trials: 3,
            seed: 42,
            source: Source::Random {
                ring: Ring::Int,
                bound: 5,
            },
            oracle_bound: 12,
            input: None,
        }
    }

    #[test]
    fn names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("bogus".parse::<Identity>().is_err());
        assert_eq!(Identity::select("all").unwrap().len(), 14);
    }

    #[test]
    fn reports_come_in_trial_order() {
        let reports = campaign("all", 4).run().unwrap();
        assert_eq!(reports.len(), 3 * 14);
        assert!(reports.iter().all(|r| r.pass));
        let seeds: Vec<u64> = reports.iter().map(|r| r.seed.unwrap()).collect();
        assert!(seeds.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn inputs_do_not_depend_on_the_selection() {
        let alone = campaign("mp", 4).run().unwrap();
        let all = campaign("all", 4).run().unwrap();
        let mp: Vec<_> = all.into_iter().filter(|r| r.identity == "mp").collect();
        assert_eq!(alone, mp);
    }

    #[test]
    fn bounds_are_usage_errors() {
        let mut c = campaign("pb", 14);
        assert!(matches!(c.run(), Err(CliError::Usage(_))));
        c.identities = vec![Identity::Clow];
        c.dim = 8;
        assert!(matches!(c.run(), Err(CliError::Usage(_))));
        c.identities = vec![Identity::Cayley];
        c.dim = 5;
        assert!(matches!(c.run(), Err(CliError::Usage(_))));
    }
}
