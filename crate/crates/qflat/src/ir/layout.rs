//! Named register roles.
//!
//! A layout maps role tags to wire lists. Roles come in two families: the
//! start-of-circuit family (`H_i` inputs, `A_i` ancillas, plus the
//! construction roles `AUX_i`, `CTRL_i`, `TEST_i`, `DUMMY_i`, `COPY_i`)
//! which must partition the width, and the end-of-circuit family (`B_i`
//! traced, `K_i` kept) which partitions the same wires a second time.

use std::fmt;
use std::str::FromStr;

use crate::ir::QubitRef;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Input register of block `i`.
    H(u32),
    /// Ancilla register of block `i`.
    A(u32),
    /// Traced register of block `i`.
    B(u32),
    /// Output register of block `i`.
    K(u32),
    /// Auxiliary comparison input for boundary `i`.
    Aux(u32),
    /// Test-selection control for boundary `i`.
    Ctrl(u32),
    /// Swap-test result qubit (boundary `i`, first or second test).
    Test(u32),
    /// Dummy zero qubit.
    Dummy(u32),
    /// Control-copy ancillas for boundary `i`.
    Copy(u32),
}

impl Role {
    pub fn block(self) -> u32 {
        match self {
            Role::H(i)
            | Role::A(i)
            | Role::B(i)
            | Role::K(i)
            | Role::Aux(i)
            | Role::Ctrl(i)
            | Role::Test(i)
            | Role::Dummy(i)
            | Role::Copy(i) => i,
        }
    }

    /// Roles that describe the state of the wire at circuit start.
    pub fn is_start_family(self) -> bool {
        !matches!(self, Role::B(_) | Role::K(_))
    }

    /// Wires the circuit reads as input (as opposed to preparing itself).
    pub fn is_input(self) -> bool {
        matches!(self, Role::H(_) | Role::Aux(_))
    }

    pub fn with_block(self, i: u32) -> Role {
        match self {
            Role::H(_) => Role::H(i),
            Role::A(_) => Role::A(i),
            Role::B(_) => Role::B(i),
            Role::K(_) => Role::K(i),
            Role::Aux(_) => Role::Aux(i),
            Role::Ctrl(_) => Role::Ctrl(i),
            Role::Test(_) => Role::Test(i),
            Role::Dummy(_) => Role::Dummy(i),
            Role::Copy(_) => Role::Copy(i),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, i) = match *self {
            Role::H(i) => ("H", i),
            Role::A(i) => ("A", i),
            Role::B(i) => ("B", i),
            Role::K(i) => ("K", i),
            Role::Aux(i) => ("AUX", i),
            Role::Ctrl(i) => ("CTRL", i),
            Role::Test(i) => ("TEST", i),
            Role::Dummy(i) => ("DUMMY", i),
            Role::Copy(i) => ("COPY", i),
        };
        write!(f, "{tag}_{i}")
    }
}

impl FromStr for Role {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (tag, idx) = s
            .rsplit_once('_')
            .ok_or_else(|| format!("role `{s}` is not of the form TAG_i"))?;
        let i: u32 = idx
            .parse()
            .map_err(|_| format!("role `{s}` has a non-numeric block index"))?;
        match tag {
            "H" => Ok(Role::H(i)),
            "A" => Ok(Role::A(i)),
            "B" => Ok(Role::B(i)),
            "K" => Ok(Role::K(i)),
            "AUX" => Ok(Role::Aux(i)),
            "CTRL" => Ok(Role::Ctrl(i)),
            "TEST" => Ok(Role::Test(i)),
            "DUMMY" => Ok(Role::Dummy(i)),
            "COPY" => Ok(Role::Copy(i)),
            _ => Err(format!("unknown role tag `{tag}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Register {
    pub name: String,
    pub role: Role,
    pub qubits: Vec<QubitRef>,
}

impl Register {
    pub fn new(name: impl Into<String>, role: Role, qubits: Vec<QubitRef>) -> Self {
        Register {
            name: name.into(),
            role,
            qubits,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RegisterLayout {
    pub registers: Vec<Register>,
}

impl RegisterLayout {
    pub fn new(registers: Vec<Register>) -> Self {
        RegisterLayout { registers }
    }

    /// Single-block layout: `H_1` over the inputs, `A_1` over the ancillas.
    pub fn plain(inputs: &[QubitRef], ancillas: &[QubitRef]) -> Self {
        let mut registers = Vec::new();
        if !inputs.is_empty() {
            registers.push(Register::new("h1", Role::H(1), inputs.to_vec()));
        }
        if !ancillas.is_empty() {
            registers.push(Register::new("a1", Role::A(1), ancillas.to_vec()));
        }
        RegisterLayout { registers }
    }

    pub fn find(&self, role: Role) -> Option<&Register> {
        self.registers.iter().find(|r| r.role == role)
    }

    pub fn is_empty(&self) -> bool {
        self.registers.is_empty()
    }

    /// Highest block index used by any register.
    pub fn max_block(&self) -> u32 {
        self.registers.iter().map(|r| r.role.block()).max().unwrap_or(0)
    }

    /// Shift all wires by `offset`, all block indices by `block_offset`, and
    /// prefix register names; used when circuits are placed side by side.
    pub fn shifted(&self, offset: usize, block_offset: u32, name_prefix: &str) -> RegisterLayout {
        RegisterLayout {
            registers: self
                .registers
                .iter()
                .map(|r| Register {
                    name: format!("{name_prefix}{}", r.name),
                    role: r.role.with_block(r.role.block() + block_offset),
                    qubits: r.qubits.iter().map(|q| QubitRef(q.0 + offset)).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn role_roundtrip() {
        for s in ["H_1", "A_2", "B_10", "K_3", "AUX_1", "CTRL_4", "TEST_2", "DUMMY_7", "COPY_1"] {
            let role: Role = s.parse().unwrap();
            assert_eq!(role.to_string(), s);
        }
        assert!("Q_1".parse::<Role>().is_err());
        assert!("H_x".parse::<Role>().is_err());
    }
}
