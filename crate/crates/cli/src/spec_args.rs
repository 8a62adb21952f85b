use clap::{Args, ValueEnum};
use mcdm::analysis::{optimize_m, DmKind, TargetDistribution};
use mcdm::{CodebookSpec, WeightSet};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Cc,
    #[value(name = "2c")]
    TwoC,
    Opt,
    Range,
    Set,
}

/// Flags that pick a base codebook.
#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Codeword length.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Family parameter for cc, 2c and opt. Optimized for --p1 when omitted.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub m_low: Option<usize>,
    #[arg(long)]
    pub m_high: Option<usize>,
    /// Comma-separated weights for --kind set.
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<usize>,
    /// Target probability of a one.
    #[arg(long)]
    pub p1: Option<f64>,
}

/// A resolved codebook together with the parameter it came from.
pub struct Resolved {
    pub kind: DmKind,
    pub m: Option<usize>,
    pub spec: CodebookSpec,
    pub target: Option<TargetDistribution>,
}

impl SpecArgs {
    pub fn target(&self) -> Result<Option<TargetDistribution>, CliError> {
        self.p1
            .map(|p| TargetDistribution::new(p).map_err(CliError::usage))
            .transpose()
    }

    pub fn dm_kind(&self) -> Result<DmKind, CliError> {
        Ok(match self.kind {
            KindArg::Cc => DmKind::ConstantComposition,
            KindArg::TwoC => DmKind::TwoComposition,
            KindArg::Opt => DmKind::UpToWeight,
            KindArg::Range => {
                let (Some(low), Some(high)) = (self.m_low, self.m_high) else {
                    return Err(CliError::Usage(
                        "--kind range needs --m-low and --m-high".into(),
                    ));
                };
                DmKind::Range { low, high }
            }
            KindArg::Set => {
                if self.weights.is_empty() {
                    return Err(CliError::Usage("--kind set needs --weights".into()));
                }
                DmKind::Weights(WeightSet::new(self.weights.iter().copied()).map_err(CliError::usage)?)
            }
        })
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        let kind = self.dm_kind()?;
        let target = self.target()?;
        let (m, spec) = if !kind.is_parameterized() {
            (None, kind.build(self.n, 0).map_err(CliError::usage)?)
        } else if let Some(m) = self.m {
            (Some(m), kind.build(self.n, m).map_err(CliError::usage)?)
        } else if let Some(t) = &target {
            let opt = optimize_m(&kind, self.n, t).map_err(CliError::usage)?;
            (Some(opt.m_star), opt.spec)
        } else {
            return Err(CliError::Usage(format!(
                "--kind {kind} needs --m or --p1"
            )));
        };
        Ok(Resolved {
            kind,
            m,
            spec,
            target,
        })
    }
}
