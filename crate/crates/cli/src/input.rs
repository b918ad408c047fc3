//! Input resolution: a positional argument that is a representation file, a
//! family file, or a compact family spec; or the flag form
//! `--family affineA --n 2 --x 2/1`.

use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

use reflex_core::families::FamilySpec;
use reflex_core::repfile::{parse_rep_file, write_rep_file};
use reflex_core::ReflectionRep;

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for InputError {}

fn err<T>(message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(message.into()))
}

/// A resolved input: the representation plus a canonical digest and a
/// human-readable description of where it came from.
pub struct ResolvedInput {
    pub rep: ReflectionRep,
    pub digest: String,
    pub description: String,
}

pub fn digest_of(rep: &ReflectionRep) -> String {
    let canonical = write_rep_file(rep);
    let mut hasher = Sha256::new();
    hasher.update(canonical.as_bytes());
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Resolve a positional input string: an existing file (rep file or family
/// file) or a compact family spec.
pub fn resolve_str(input: &str) -> Result<ResolvedInput, InputError> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input)
            .map_err(|e| InputError(format!("cannot read {input}: {e}")))?;
        let first = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .unwrap_or("");
        if first.starts_with("reflex-rep") {
            let raw = parse_rep_file(&text).map_err(|e| InputError(e.to_string()))?;
            let rep = raw.clone().into_rep().map_err(|e| InputError(e.to_string()))?;
            return Ok(ResolvedInput {
                digest: digest_of(&rep),
                description: format!("file {input}"),
                rep,
            });
        }
        if first.starts_with("family") {
            let spec = FamilySpec::parse_file(&text).map_err(|e| InputError(e.to_string()))?;
            let rep = spec.realize().map_err(|e| InputError(e.to_string()))?;
            return Ok(ResolvedInput {
                digest: digest_of(&rep),
                description: format!("family file {input} ({spec:?})"),
                rep,
            });
        }
        return err(format!(
            "{input}: unrecognized file (expected a reflex-rep v1 header or a family line)"
        ));
    }
    let spec = FamilySpec::parse(input).map_err(|e| {
        InputError(format!("\"{input}\" is neither an existing file nor a family spec: {e}"))
    })?;
    let rep = spec.realize().map_err(|e| InputError(e.to_string()))?;
    Ok(ResolvedInput {
        digest: digest_of(&rep),
        description: format!("family {input}"),
        rep,
    })
}

/// Flag form of a family selection.
pub struct FamilyFlags {
    pub family: Option<String>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub x: Option<String>,
    pub base: Option<String>,
    pub seed: Option<u64>,
}

impl FamilyFlags {
    fn to_spec_string(&self) -> Result<String, InputError> {
        let Some(tag) = &self.family else {
            return err("no input given: pass a file, a compact family spec, or --family");
        };
        let mut parts: Vec<String> = Vec::new();
        if let Some(seed) = self.seed {
            if tag == "conjugate" {
                parts.push(format!("seed={seed}"));
            }
        }
        if let Some(base) = &self.base {
            parts.push(format!("base={base}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(x) = &self.x {
            parts.push(format!("x={x}"));
        }
        Ok(if parts.is_empty() { tag.clone() } else { format!("{tag}:{}", parts.join(",")) })
    }
}

/// Resolve either the positional input or the flag form.
pub fn resolve(input: &Option<String>, flags: &FamilyFlags) -> Result<ResolvedInput, InputError> {
    match (input, &flags.family) {
        (Some(_), Some(_)) => err("give either a positional input or --family, not both"),
        (Some(s), None) => resolve_str(s),
        (None, Some(_)) => resolve_str(&flags.to_spec_string()?),
        (None, None) => err("no input given: pass a file, a compact family spec, or --family"),
    }
}

/// Named generator matrices for validation. Unlike [`resolve`], a
/// representation file whose generators fail reflection validation still
/// resolves: the per-generator verdicts are the point of `validate`.
pub struct ValidationInput {
    pub named: Vec<(String, reflex_core::Matrix)>,
    pub digest: String,
    pub description: String,
}

pub fn resolve_for_validation(
    input: &Option<String>,
    flags: &FamilyFlags,
) -> Result<ValidationInput, InputError> {
    if let (Some(path), None) = (input, &flags.family) {
        if Path::new(path).is_file() {
            let text = std::fs::read_to_string(path)
                .map_err(|e| InputError(format!("cannot read {path}: {e}")))?;
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            if first.starts_with("reflex-rep") {
                let raw = parse_rep_file(&text).map_err(|e| InputError(e.to_string()))?;
                // Prefer the canonical digest; fall back to the file bytes
                // when the representation does not validate.
                let digest = match raw.clone().into_rep() {
                    Ok(rep) => digest_of(&rep),
                    Err(_) => {
                        let mut hasher = Sha256::new();
                        hasher.update(text.as_bytes());
                        hasher.finalize().iter().map(|b| format!("{b:02x}")).collect()
                    }
                };
                return Ok(ValidationInput {
                    named: raw.generators,
                    digest,
                    description: format!("file {path}"),
                });
            }
        }
    }
    let resolved = resolve(input, flags)?;
    Ok(ValidationInput {
        named: resolved
            .rep
            .generators()
            .iter()
            .map(|g| (g.name().to_string(), g.matrix().clone()))
            .collect(),
        digest: resolved.digest,
        description: resolved.description,
    })
}
