//! The three worked example codes, over `F_2`.

use super::{from_pauli, parse_pauli_file, stabilizer_code_from_isotropic, Code};
use crate::symplectic::Subspace;

/// Stabilizer of the two-qubit repetition code.
pub const REPETITION_STABILIZER: &str = "ZZ\n";

/// Gauge generators of the 2x2 Bacon–Shor code.
pub const BACON_SHOR_GAUGE: &str = "\
XXII
IIXX
ZIZI
IZIZ
";

/// Stabilizer generators `s_1..s_8` of the nine-qubit Shor code.
pub const SHOR_STABILIZER: &str = "\
ZZIIIIIII
IZZIIIIII
IIIZZIIII
IIIIZZIII
IIIIIIZZI
IIIIIIIZZ
XXXXXXIII
IIIXXXXXX
";

fn span(text: &str) -> Subspace {
    from_pauli(&parse_pauli_file(text).expect("fixture parses")).expect("fixture spans")
}

/// `C = span{(e,e), (f,f), (f,0)}`, the `[[2,1,1]]_2` repetition code.
pub fn repetition() -> Code {
    stabilizer_code_from_isotropic(&span(REPETITION_STABILIZER)).expect("ZZ is isotropic")
}

/// The gauge group `D` of the 2x2 Bacon–Shor code.
pub fn bacon_shor_gauge() -> Code {
    Code::new(span(BACON_SHOR_GAUGE))
}

/// The normalizer `C = rad(D)^⊥` of the 2x2 Bacon–Shor code.
pub fn bacon_shor() -> Code {
    Code::new(bacon_shor_gauge().radical().perp())
}

pub fn shor_stabilizer() -> Subspace {
    span(SHOR_STABILIZER)
}

/// `C = S^⊥` for the Shor stabilizer `S`, the `[[9,1,3]]_2` code.
pub fn shor() -> Code {
    stabilizer_code_from_isotropic(&shor_stabilizer()).expect("Shor stabilizer is isotropic")
}

/// Named lookup used by the CLI.
pub fn by_name(name: &str) -> Option<Code> {
    match name {
        "repetition" => Some(repetition()),
        "bacon-shor" => Some(bacon_shor()),
        "bacon-shor-gauge" => Some(bacon_shor_gauge()),
        "shor" => Some(shor()),
        _ => None,
    }
}

pub const NAMES: [&str; 3] = ["repetition", "bacon-shor", "shor"];
