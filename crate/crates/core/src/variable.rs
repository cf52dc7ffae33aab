use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A variable of one of the ambient polynomial rings.
///
/// `Z { row, col }` is the matrix coordinate `z[row,col]`, `T` the family
/// parameter, `S` the localization helper adjoined for saturations, and
/// `Aux` (printed `w`) the helper used when intersecting ideals.  The
/// derived `Ord` is only the storage order for sparse exponent vectors;
/// monomial comparisons always go through a [`crate::order::MonomialOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    Aux,
    S,
    T,
    Z { row: u8, col: u8 },
}

impl Variable {
    pub fn z(row: usize, col: usize) -> Variable {
        Variable::Z {
            row: row as u8,
            col: col as u8,
        }
    }
}

impl std::fmt::Display for Variable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variable::Aux => write!(f, "w"),
            Variable::S => write!(f, "s"),
            Variable::T => write!(f, "t"),
            Variable::Z { row, col } => write!(f, "z[{},{}]", row, col),
        }
    }
}

/// Descriptor of an ambient ring: the n x n grid of `z` variables plus
/// flags for the scalar variables present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub n: u8,
    #[serde(default)]
    pub has_t: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    pub has_s: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    pub has_aux: bool,
}

fn is_false(b: &bool) -> bool {
    !b
}

impl Ring {
    pub fn z_only(n: usize) -> Ring {
        Ring {
            n: n as u8,
            has_t: false,
            has_s: false,
            has_aux: false,
        }
    }

    pub fn with_t(n: usize) -> Ring {
        Ring {
            has_t: true,
            ..Ring::z_only(n)
        }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn add_s(&self) -> Ring {
        Ring {
            has_s: true,
            ..*self
        }
    }

    pub fn add_aux(&self) -> Ring {
        Ring {
            has_aux: true,
            ..*self
        }
    }

    pub fn drop_var(&self, v: Variable) -> Ring {
        match v {
            Variable::Aux => Ring {
                has_aux: false,
                ..*self
            },
            Variable::S => Ring {
                has_s: false,
                ..*self
            },
            Variable::T => Ring {
                has_t: false,
                ..*self
            },
            Variable::Z { .. } => *self,
        }
    }

    pub fn contains(&self, v: Variable) -> bool {
        match v {
            Variable::Aux => self.has_aux,
            Variable::S => self.has_s,
            Variable::T => self.has_t,
            Variable::Z { row, col } => {
                (1..=self.n).contains(&row) && (1..=self.n).contains(&col)
            }
        }
    }

    pub fn check_contains(&self, v: Variable) -> Result<(), Error> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VariableOutsideRing(v.to_string(), *self))
        }
    }

    pub fn check_same(&self, other: &Ring) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(*self, *other))
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n() * self.n()
            + usize::from(self.has_t)
            + usize::from(self.has_s)
            + usize::from(self.has_aux)
    }

    /// All variables of the ring, in the priority sequence of the default
    /// elimination order: `w`, `s`, `t`, then `z[1,n] .. z[1,1]`, then the
    /// remaining rows in row-major order.
    pub fn variables(&self) -> Vec<Variable> {
        let n = self.n();
        let mut vars = Vec::with_capacity(self.num_vars());
        if self.has_aux {
            vars.push(Variable::Aux);
        }
        if self.has_s {
            vars.push(Variable::S);
        }
        if self.has_t {
            vars.push(Variable::T);
        }
        for col in (1..=n).rev() {
            vars.push(Variable::z(1, col));
        }
        for row in 2..=n {
            for col in 1..=n {
                vars.push(Variable::z(row, col));
            }
        }
        vars
    }
}
