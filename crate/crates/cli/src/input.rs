//! Loading a code from a fixture name or a file.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use qsymp::codes::{self, fixtures, Role, SubsystemCode};
use qsymp::{Code, Error, Matrix, PrimeField, Result, Subspace, SympVector};

#[derive(Args, Debug, Clone, Default)]
pub struct InputArgs {
    /// Built-in code: repetition, bacon-shor, bacon-shor-gauge, shor
    #[arg(long, group = "source")]
    pub fixture: Option<String>,
    /// Pauli generator file (one generator per line)
    #[arg(long, group = "source")]
    pub pauli: Option<PathBuf>,
    /// Code JSON file
    #[arg(long, group = "source")]
    pub json: Option<PathBuf>,
    /// Matrix text file ("q rows cols" header, then rows)
    #[arg(long, group = "source")]
    pub matrix: Option<PathBuf>,
    /// How to read the subspace: code, stabilizer or gauge
    #[arg(long = "as", value_name = "ROLE")]
    pub role: Option<Role>,
    /// Expected field order; input over a different field is rejected
    #[arg(long)]
    pub q: Option<u32>,
    /// Number of factors, needed only for an empty generator list
    #[arg(long)]
    pub n: Option<usize>,
}

/// A code together with where it came from.
pub struct Loaded {
    pub source: String,
    pub role: Role,
    pub code: Code,
    /// Generators in the order they were given, used to choose `S′`.
    pub generators: Vec<SympVector>,
    pub subsystem: Option<SubsystemCode>,
}

impl InputArgs {
    pub fn is_given(&self) -> bool {
        self.fixture.is_some() || self.pauli.is_some() || self.json.is_some() || self.matrix.is_some()
    }

    pub fn load(&self) -> Result<Loaded> {
        let loaded = if let Some(name) = &self.fixture {
            load_fixture(name)?
        } else if let Some(path) = &self.pauli {
            let gens = codes::parse_pauli_file(&read(path)?)?;
            let vectors: Vec<SympVector> = gens.iter().map(|p| p.to_vector()).collect();
            let role = self.role.unwrap_or(Role::Code);
            let space = if gens.is_empty() {
                let n = self
                    .n
                    .ok_or_else(|| Error::Invalid("empty generator list needs --n".into()))?;
                Subspace::zero(PrimeField::binary(), n)
            } else {
                if role == Role::Stabilizer {
                    codes::check_commuting(&vectors)?;
                }
                codes::from_pauli(&gens)?
            };
            interpret(format!("pauli:{}", path.display()), role, space, vectors)?
        } else if let Some(path) = &self.json {
            let j: codes::CodeJson = serde_json::from_str(&read(path)?)
                .map_err(|e| Error::Parse {
                    line: e.line(),
                    message: e.to_string(),
                })?;
            let space = Subspace::from_json(&j.space)?;
            interpret(format!("json:{}", path.display()), self.role.unwrap_or(j.role), space, Vec::new())?
        } else if let Some(path) = &self.matrix {
            let m = Matrix::from_text(&read(path)?)?;
            let space = Subspace::from_matrix(&m)?;
            interpret(format!("matrix:{}", path.display()), self.role.unwrap_or(Role::Code), space, Vec::new())?
        } else {
            return Err(Error::Invalid(
                "no input: pass --fixture, --pauli, --json or --matrix".into(),
            ));
        };
        if let Some(q) = self.q {
            let have = loaded.code.field().order();
            if have != q {
                return Err(Error::FieldMismatch { left: q, right: have });
            }
        }
        Ok(loaded)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))
}

fn interpret(source: String, role: Role, space: Subspace, generators: Vec<SympVector>) -> Result<Loaded> {
    Ok(match role {
        Role::Code => Loaded {
            source,
            role,
            code: Code::new(space),
            generators,
            subsystem: None,
        },
        Role::Stabilizer => Loaded {
            source,
            role,
            code: codes::stabilizer_code_from_isotropic(&space)?,
            generators,
            subsystem: None,
        },
        Role::Gauge => {
            let gauge = Code::new(space);
            Loaded {
                source,
                role,
                code: gauge.clone(),
                generators,
                subsystem: Some(codes::subsystem_from_gauge(gauge)),
            }
        }
    })
}

fn pauli_vectors(text: &str) -> Vec<SympVector> {
    codes::parse_pauli_file(text)
        .expect("fixture parses")
        .iter()
        .map(|p| p.to_vector())
        .collect()
}

fn load_fixture(name: &str) -> Result<Loaded> {
    let code = fixtures::by_name(name).ok_or_else(|| {
        Error::Invalid(format!(
            "unknown fixture {name:?} (expected repetition, bacon-shor, bacon-shor-gauge or shor)"
        ))
    })?;
    let (generators, subsystem) = match name {
        "repetition" => (pauli_vectors(fixtures::REPETITION_STABILIZER), None),
        "shor" => (pauli_vectors(fixtures::SHOR_STABILIZER), None),
        _ => (
            pauli_vectors(fixtures::BACON_SHOR_GAUGE),
            Some(codes::subsystem_from_gauge(fixtures::bacon_shor_gauge())),
        ),
    };
    Ok(Loaded {
        source: format!("fixture:{name}"),
        role: if name == "bacon-shor-gauge" { Role::Gauge } else { Role::Code },
        code,
        generators,
        subsystem,
    })
}
