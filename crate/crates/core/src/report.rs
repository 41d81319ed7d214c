//! Classification records and property counting.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{self, par_count, par_filter_map};
use crate::families::{self, BaxterMethod, DumontMethod, FreelyBraidedMethod, SimsunMethod};
use crate::grassmann;
use crate::matcher;
use crate::pattern::Pattern;
use crate::perm::{PermError, Permutation};
use crate::schubert::{self, DbiMethod, FactorialMethod, GorensteinMethod, HexagonMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Smooth,
    Factorial,
    Gorenstein,
    Dbi,
    Hexagon123Avoiding,
    Boolean,
    Balanced,
    ForestLike,
    Baxter,
    Simsun,
    Dumont1,
    Dumont2,
    FreelyBraided,
}

impl Property {
    pub const ALL: [Property; 13] = [
        Property::Smooth,
        Property::Factorial,
        Property::Gorenstein,
        Property::Dbi,
        Property::Hexagon123Avoiding,
        Property::Boolean,
        Property::Balanced,
        Property::ForestLike,
        Property::Baxter,
        Property::Simsun,
        Property::Dumont1,
        Property::Dumont2,
        Property::FreelyBraided,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Smooth => "smooth",
            Property::Factorial => "factorial",
            Property::Gorenstein => "gorenstein",
            Property::Dbi => "dbi",
            Property::Hexagon123Avoiding => "hexagon_123_avoiding",
            Property::Boolean => "boolean",
            Property::Balanced => "balanced",
            Property::ForestLike => "forest_like",
            Property::Baxter => "baxter",
            Property::Simsun => "simsun",
            Property::Dumont1 => "dumont1",
            Property::Dumont2 => "dumont2",
            Property::FreelyBraided => "freely_braided",
        }
    }

    /// Method names accepted for this property, default first.
    pub fn methods(self) -> Vec<&'static str> {
        match self {
            Property::Factorial => FactorialMethod::ALL.iter().map(|m| m.name()).collect(),
            Property::Gorenstein => GorensteinMethod::ALL.iter().map(|m| m.name()).collect(),
            Property::Dbi => DbiMethod::ALL.iter().rev().map(|m| m.name()).collect(),
            Property::Hexagon123Avoiding => HexagonMethod::ALL.iter().rev().map(|m| m.name()).collect(),
            Property::Baxter => BaxterMethod::ALL.iter().map(|m| m.name()).collect(),
            Property::Simsun => SimsunMethod::ALL.iter().map(|m| m.name()).collect(),
            Property::Dumont1 | Property::Dumont2 => DumontMethod::ALL.iter().map(|m| m.name()).collect(),
            Property::FreelyBraided => FreelyBraidedMethod::ALL.iter().map(|m| m.name()).collect(),
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.replace('-', "_");
        let alias = match key.as_str() {
            "hexagon" | "123_hexagon" => Some(Property::Hexagon123Avoiding),
            "dumont_first" => Some(Property::Dumont1),
            "dumont_second" => Some(Property::Dumont2),
            _ => None,
        };
        alias.or_else(|| Property::ALL.into_iter().find(|p| p.name() == key)).ok_or_else(|| {
            let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
            format!("unknown property {s:?}, expected one of: {}", names.join(", "))
        })
    }
}

/// A property together with the characterization used to decide it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classifier {
    property: Property,
    method: Option<&'static str>,
}

impl Classifier {
    pub fn new(property: Property, method: Option<&str>) -> Result<Self, String> {
        let methods = property.methods();
        let method = match method {
            None => methods.first().copied(),
            Some(m) => match methods.iter().find(|&&x| x == m) {
                Some(&x) => Some(x),
                None if methods.is_empty() => return Err(format!("property {property} takes no method")),
                None => {
                    return Err(format!("unknown method {m:?} for {property}, expected one of: {}", methods.join(", ")))
                }
            },
        };
        Ok(Classifier { property, method })
    }

    pub fn property(&self) -> Property {
        self.property
    }

    pub fn method(&self) -> Option<&'static str> {
        self.method
    }

    pub fn holds(&self, pi: &Permutation) -> bool {
        fn m<T: FromStr>(name: Option<&str>) -> T
        where
            T::Err: fmt::Debug,
        {
            name.expect("validated method").parse().expect("validated method")
        }
        let method = self.method;
        match self.property {
            Property::Smooth => schubert::is_smooth(pi),
            Property::Factorial => schubert::is_factorial(pi, m(method)),
            Property::Gorenstein => schubert::is_gorenstein(pi, m(method)),
            Property::Dbi => schubert::is_dbi(pi, m(method)),
            Property::Hexagon123Avoiding => schubert::is_123_hexagon_avoiding(pi, m(method)),
            Property::Boolean => schubert::is_boolean(pi),
            Property::Balanced => grassmann::is_balanced(pi),
            Property::ForestLike => pi.is_forest_like(),
            Property::Baxter => families::is_baxter(pi, m(method)),
            Property::Simsun => families::is_simsun(pi, m(method)),
            Property::Dumont1 => families::is_dumont_first(pi, m(method)),
            Property::Dumont2 => families::is_dumont_second(pi, m(method)),
            Property::FreelyBraided => families::is_freely_braided(pi, m(method)),
        }
    }
}

/// Everything `classify` reports about one permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub perm: String,
    pub smooth: bool,
    pub factorial: bool,
    pub gorenstein: bool,
    pub dbi: bool,
    pub hexagon_123_avoiding: bool,
    pub boolean: bool,
    pub balanced: bool,
    pub forest_like: bool,
    pub baxter: bool,
    pub simsun: bool,
    pub dumont1: bool,
    pub dumont2: bool,
    pub freely_braided: bool,
    pub descents: Vec<usize>,
    pub cycle_type: Vec<usize>,
}

pub fn classify(pi: &Permutation) -> Classification {
    let is = |p: Property| Classifier::new(p, None).expect("default method").holds(pi);
    Classification {
        perm: pi.to_string(),
        smooth: is(Property::Smooth),
        factorial: is(Property::Factorial),
        gorenstein: is(Property::Gorenstein),
        dbi: is(Property::Dbi),
        hexagon_123_avoiding: is(Property::Hexagon123Avoiding),
        boolean: is(Property::Boolean),
        balanced: is(Property::Balanced),
        forest_like: is(Property::ForestLike),
        baxter: is(Property::Baxter),
        simsun: is(Property::Simsun),
        dumont1: is(Property::Dumont1),
        dumont2: is(Property::Dumont2),
        freely_braided: is(Property::FreelyBraided),
        descents: pi.descents(),
        cycle_type: pi.cycle_type(),
    }
}

/// What a count or listing filters on.
#[derive(Debug, Clone)]
pub enum Target {
    Property(Classifier),
    /// Permutations avoiding the pattern.
    Avoiders(Pattern),
}

impl Target {
    pub fn holds(&self, pi: &Permutation) -> bool {
        match self {
            Target::Property(c) => c.holds(pi),
            Target::Avoiders(p) => matcher::avoids(p, pi),
        }
    }
}

/// Counts for ranks `1..=max_n`.
pub fn count_sequence(target: &Target, max_n: usize) -> Result<Vec<usize>, PermError> {
    (1..=max_n).map(|n| par_count(n, |pi| target.holds(pi))).collect()
}

/// The permutations of rank `n` selected by `target`, lexicographically.
pub fn list(target: &Target, n: usize) -> Result<Vec<Permutation>, PermError> {
    par_filter_map(n, |pi| target.holds(pi).then(|| pi.clone()))
}

/// Default enumeration bound for counts and listings.
pub const DEFAULT_COUNT_CAP: usize = 9;

/// Rejects `n` above `cap` (itself at most the hard enumeration cap).
pub fn check_cap(n: usize, cap: usize) -> Result<(), PermError> {
    let cap = cap.min(enumerate::ENUMERATION_RANK_CAP);
    if n > cap {
        return Err(PermError::RankCap { rank: n, cap });
    }
    if n == 0 {
        return Err(PermError::Empty);
    }
    Ok(())
}
