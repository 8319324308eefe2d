//! Named variable contexts and monomial text syntax.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// An ordered list of variable names fixing the ambient polynomial ring.
///
/// One context is shared by every object in a computation; the kernel types
/// themselves only carry the variable count, so the context is what turns
/// them back into text. Names must be unique and free of whitespace, `,`,
/// `*`, and `^`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    /// The default context `x1, x2, ..., xn`.
    pub fn numbered(n: usize) -> Self {
        VarContext { names: (1..=n).map(|i| format!("x{i}")).collect() }
    }

    /// A context with explicit names.
    pub fn with_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(['*', '^', ',']) || name.contains(char::is_whitespace) {
                return Err(Error::InvalidArgument("variable names must be nonempty and free of '*', '^', ',' and whitespace"));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument("variable names must be unique"));
            }
        }
        Ok(VarContext { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses monomial text syntax: `*`-separated factors, each `v` or
    /// `v^e` with `v` a variable name and `e >= 1`, or the literal `1` for
    /// the unit monomial. Errors carry the byte offset of the offending
    /// factor within `text`.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse { offset: 0, message: "empty monomial".to_string() });
        }
        if trimmed == "1" {
            return Ok(Monomial::one(self.len()));
        }
        let base = text.len() - text.trim_start().len();
        let mut exps = alloc::vec![0u32; self.len()];
        let mut offset = base;
        for factor in trimmed.split('*') {
            let here = offset;
            offset += factor.len() + 1;
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse { offset: here, message: "empty factor".to_string() });
            }
            let (name, exp) = match factor.split_once('^') {
                None => (factor, 1u32),
                Some((name, exp_text)) => {
                    let exp: u32 = exp_text.trim().parse().map_err(|_| Error::Parse {
                        offset: here,
                        message: format!("bad exponent '{}'", exp_text.trim()),
                    })?;
                    if exp == 0 {
                        return Err(Error::Parse {
                            offset: here,
                            message: "exponent must be >= 1".to_string(),
                        });
                    }
                    (name.trim(), exp)
                }
            };
            let index = self.index_of(name).ok_or_else(|| Error::Parse {
                offset: here,
                message: format!("unknown variable '{name}'"),
            })?;
            exps[index] = exps[index].checked_add(exp).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial::from_exponents(exps))
    }

    /// Formats a monomial with this context's names, e.g. `x1*x3^2`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        assert_eq!(m.nvars(), self.len(), "context mismatch");
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Formats an ideal in ideal text syntax: generators joined by `, `,
    /// with `0` for the zero ideal.
    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        assert_eq!(ideal.nvars(), self.len(), "context mismatch");
        if ideal.is_zero() {
            return "0".to_string();
        }
        let gens: Vec<String> = ideal.generators().iter().map(|g| self.format_monomial(g)).collect();
        gens.join(", ")
    }

    /// Formats a set of variable indices as a parenthesized prime, e.g.
    /// `(x1, x3, x7)`.
    pub fn format_vars<'a, I: IntoIterator<Item = &'a usize>>(&self, vars: I) -> String {
        let names: Vec<String> = vars.into_iter().map(|&i| self.names[i].clone()).collect();
        format!("({})", names.join(", "))
    }
}
