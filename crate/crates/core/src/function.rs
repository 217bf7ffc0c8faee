//! Closed registry of every implemented function, keyed by its symbolic
//! name. Used by the sequence engine, table verification and the CLI.

use std::fmt;
use std::str::FromStr;

use crate::arith::{greatest_proper_divisor, num_divisors, sum_divisors};
use crate::classical::{check_s_multiplicative, s};
use crate::error::{Error, Result};
use crate::iterations::{iterate_first_kind, iterate_second_kind, iterate_third_kind};
use crate::parts::{
    cubic_complementary, inferior_cubic_part, inferior_prime_part, inferior_square_part,
    m_power_complementary, prime_complementary, square_complementary, superior_cubic_part,
    superior_prime_part, superior_square_part,
};
use crate::variants::{
    ceil_s, sdf, sk, sntp, sw, z, SearchOutcome, DEFAULT_PRIME_BOUND, DEFAULT_SEARCH_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    S,
    DoubleFactorial,
    Kurepa,
    Wagstaff,
    Ceil { k: u32 },
    PseudoSmarandache,
    NearToPrimordial,
    InferiorPrimePart,
    SuperiorPrimePart,
    InferiorSquarePart,
    SuperiorSquarePart,
    InferiorCubicPart,
    SuperiorCubicPart,
    SquareComplement,
    CubicComplement,
    PowerComplement { m: u32 },
    PrimeComplement,
    NumDivisors,
    SumDivisors,
    GreatestProperDivisor,
    FirstKindDivisors,
    SecondKindSigma,
    ThirdKindGd,
}

/// Every symbolic name accepted by [`FunctionId::parse`].
pub const FUNCTION_NAMES: &[&str] = &[
    "S",
    "Sdf",
    "SK",
    "SW",
    "Sk",
    "Z",
    "SNTP",
    "ISp",
    "SSp",
    "ISs",
    "SSs",
    "ISc",
    "SSc",
    "sq-comp",
    "cub-comp",
    "mpow-comp",
    "prime-comp",
    "d",
    "sigma",
    "gd",
    "SI1-d",
    "SI2-sigma",
    "SI3-gd",
];

/// Bounds and extra arguments a function may need beyond its main argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalParams {
    pub search_bound: u64,
    pub prime_bound: u64,
    /// Threshold b for the second- and third-kind iterations.
    pub threshold: Option<u64>,
}

impl Default for EvalParams {
    fn default() -> Self {
        EvalParams {
            search_bound: DEFAULT_SEARCH_BOUND,
            prime_bound: DEFAULT_PRIME_BOUND,
            threshold: None,
        }
    }
}

/// What evaluating a function produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Value {
    Int(u64),
    Outcome(SearchOutcome),
}

impl Value {
    /// The integer answer, if there is one.
    pub fn as_int(self) -> Option<u64> {
        match self {
            Value::Int(v) | Value::Outcome(SearchOutcome::Found(v)) => Some(v),
            Value::Outcome(_) => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Outcome(o) => write!(f, "{o}"),
        }
    }
}

impl FunctionId {
    /// Resolves a symbolic name. `Sk` needs `k` and `mpow-comp` needs `m`;
    /// names are case-sensitive (`SK` and `Sk` are different functions).
    pub fn parse(name: &str, k: Option<u32>, m: Option<u32>) -> Result<Self> {
        use FunctionId::*;
        let id = match name {
            "S" => S,
            "Sdf" => DoubleFactorial,
            "SK" => Kurepa,
            "SW" => Wagstaff,
            "Sk" => Ceil {
                k: k.ok_or_else(|| Error::domain("Sk", "requires the order k"))?,
            },
            "Z" => PseudoSmarandache,
            "SNTP" => NearToPrimordial,
            "ISp" => InferiorPrimePart,
            "SSp" => SuperiorPrimePart,
            "ISs" => InferiorSquarePart,
            "SSs" => SuperiorSquarePart,
            "ISc" => InferiorCubicPart,
            "SSc" => SuperiorCubicPart,
            "sq-comp" => SquareComplement,
            "cub-comp" => CubicComplement,
            "mpow-comp" => PowerComplement {
                m: m.ok_or_else(|| Error::domain("mpow-comp", "requires the power m"))?,
            },
            "prime-comp" => PrimeComplement,
            "d" => NumDivisors,
            "sigma" => SumDivisors,
            "gd" => GreatestProperDivisor,
            "SI1-d" => FirstKindDivisors,
            "SI2-sigma" => SecondKindSigma,
            "SI3-gd" => ThirdKindGd,
            other => return Err(Error::UnknownFunction(other.to_string())),
        };
        Ok(id)
    }

    pub fn name(self) -> &'static str {
        use FunctionId::*;
        match self {
            S => "S",
            DoubleFactorial => "Sdf",
            Kurepa => "SK",
            Wagstaff => "SW",
            Ceil { .. } => "Sk",
            PseudoSmarandache => "Z",
            NearToPrimordial => "SNTP",
            InferiorPrimePart => "ISp",
            SuperiorPrimePart => "SSp",
            InferiorSquarePart => "ISs",
            SuperiorSquarePart => "SSs",
            InferiorCubicPart => "ISc",
            SuperiorCubicPart => "SSc",
            SquareComplement => "sq-comp",
            CubicComplement => "cub-comp",
            PowerComplement { .. } => "mpow-comp",
            PrimeComplement => "prime-comp",
            NumDivisors => "d",
            SumDivisors => "sigma",
            GreatestProperDivisor => "gd",
            FirstKindDivisors => "SI1-d",
            SecondKindSigma => "SI2-sigma",
            ThirdKindGd => "SI3-gd",
        }
    }

    /// Functions defined only at prime arguments.
    pub fn prime_arguments_only(self) -> bool {
        matches!(self, FunctionId::Kurepa | FunctionId::Wagstaff)
    }

    pub fn eval(self, x: u64, params: &EvalParams) -> Result<Value> {
        use FunctionId::*;
        let int = |r: Result<u64>| r.map(Value::Int);
        let outcome = |r: Result<SearchOutcome>| r.map(Value::Outcome);
        match self {
            S => int(s(x)),
            DoubleFactorial => int(sdf(x)),
            Kurepa => outcome(sk(x, params.search_bound)),
            Wagstaff => outcome(sw(x, params.search_bound)),
            Ceil { k } => int(ceil_s(x, k)),
            PseudoSmarandache => int(z(x)),
            NearToPrimordial => outcome(sntp(x, params.prime_bound)),
            InferiorPrimePart => int(inferior_prime_part(x)),
            SuperiorPrimePart => int(superior_prime_part(x)),
            InferiorSquarePart => Ok(Value::Int(inferior_square_part(x))),
            SuperiorSquarePart => int(superior_square_part(x)),
            InferiorCubicPart => Ok(Value::Int(inferior_cubic_part(x))),
            SuperiorCubicPart => int(superior_cubic_part(x)),
            SquareComplement => int(square_complementary(x)),
            CubicComplement => int(cubic_complementary(x)),
            PowerComplement { m } => int(m_power_complementary(x, m)),
            PrimeComplement => int(prime_complementary(x)),
            NumDivisors => int(num_divisors(x)),
            SumDivisors => int(sum_divisors(x)),
            GreatestProperDivisor => int(greatest_proper_divisor(x)),
            FirstKindDivisors => int(iterate_first_kind(NumDivisors, x).map(|t| t.count)),
            SecondKindSigma => {
                let b = self.threshold(params)?;
                int(iterate_second_kind(SumDivisors, x, b).map(|t| t.count))
            }
            ThirdKindGd => {
                let b = self.threshold(params)?;
                int(iterate_third_kind(GreatestProperDivisor, x, b).map(|t| t.count))
            }
        }
    }

    fn threshold(self, params: &EvalParams) -> Result<u64> {
        params
            .threshold
            .ok_or_else(|| Error::domain(self.name(), "requires a threshold b"))
    }

    /// Evaluates and insists on a plain integer answer.
    pub fn eval_int(self, x: u64, params: &EvalParams) -> Result<u64> {
        let v = self.eval(x, params)?;
        v.as_int()
            .ok_or_else(|| Error::domain(self.name(), format!("no integer value at {x}: {v}")))
    }

    /// Whether f(a·b) = max(f(a), f(b)) for the coprime pair (a, b).
    pub fn check_s_multiplicative(self, a: u64, b: u64, params: &EvalParams) -> Result<bool> {
        check_s_multiplicative(|n| self.eval_int(n, params), a, b)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionId::Ceil { k } => write!(f, "Sk[k={k}]"),
            FunctionId::PowerComplement { m } => write!(f, "mpow-comp[m={m}]"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    /// Accepts the plain names plus `Sk[k=N]` / `mpow-comp[m=N]`, the
    /// forms produced by `Display`.
    fn from_str(text: &str) -> Result<Self> {
        let param = |prefix: &str| -> Option<Result<u32>> {
            let inner = text.strip_prefix(prefix)?.strip_suffix(']')?;
            Some(
                inner
                    .parse()
                    .map_err(|_| Error::UnknownFunction(text.to_string())),
            )
        };
        if let Some(k) = param("Sk[k=") {
            return Ok(FunctionId::Ceil { k: k? });
        }
        if let Some(m) = param("mpow-comp[m=") {
            return Ok(FunctionId::PowerComplement { m: m? });
        }
        FunctionId::parse(text, None, None)
    }
}
