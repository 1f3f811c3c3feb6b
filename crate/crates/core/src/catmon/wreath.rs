use super::monoid::{FiniteMonoid, MonoidHomomorphism};
use crate::error::{Error, Result};

/// An acting monoid `N`, a coefficient monoid `M`, a finite set `X` and a
/// left action `N × X → X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathData {
    acting: FiniteMonoid,
    coefficients: FiniteMonoid,
    points: Vec<String>,
    /// `action[n][x] = n · x`.
    action: Vec<Vec<usize>>,
}

/// An element `(α, f)` of `N ∫ M^X`; `f[x]` is the value at the `x`-th point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub acting: usize,
    pub function: Vec<usize>,
}

impl WreathData {
    /// Checks the action table: shape, identity acts trivially and
    /// `(n n') · x = n · (n' · x)`.
    pub fn new(acting: FiniteMonoid, coefficients: FiniteMonoid, points: Vec<String>, action: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidAction(m));
        let k = points.len();
        if action.len() != acting.size() || action.iter().any(|row| row.len() != k) {
            return bad(format!("action table must be {} × {k}", acting.size()));
        }
        if action.iter().flatten().any(|&y| y >= k) {
            return bad("action sends a point outside X".into());
        }
        if let Some(x) = (0..k).find(|&x| action[acting.identity()][x] != x) {
            return bad(format!("identity moves {}", points[x]));
        }
        for a in 0..acting.size() {
            for b in 0..acting.size() {
                for x in 0..k {
                    if action[acting.mul(a, b)][x] != action[a][action[b][x]] {
                        return bad(format!(
                            "({}·{})·{} ≠ {}·({}·{})",
                            acting.name(a),
                            acting.name(b),
                            points[x],
                            acting.name(a),
                            acting.name(b),
                            points[x]
                        ));
                    }
                }
            }
        }
        Ok(Self { acting, coefficients, points, action })
    }

    /// `N` acting trivially on `X`.
    pub fn trivial_action(acting: FiniteMonoid, coefficients: FiniteMonoid, points: Vec<String>) -> Self {
        let action = vec![(0..points.len()).collect(); acting.size()];
        Self { acting, coefficients, points, action }
    }

    pub fn acting(&self) -> &FiniteMonoid {
        &self.acting
    }

    pub fn coefficients(&self) -> &FiniteMonoid {
        &self.coefficients
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn act(&self, n: usize, x: usize) -> usize {
        self.action[n][x]
    }

    /// `|N| · |M|^|X|`.
    pub fn size(&self) -> usize {
        self.acting.size() * self.function_count()
    }

    fn function_count(&self) -> usize {
        self.coefficients.size().pow(self.points.len() as u32)
    }

    /// Elements are indexed `α · |M|^|X| + code(f)`, where `code` reads `f`
    /// as a base-`|M|` numeral with the first point most significant.
    pub fn encode(&self, e: &WreathElement) -> usize {
        let m = self.coefficients.size();
        e.acting * self.function_count() + e.function.iter().fold(0, |acc, &v| acc * m + v)
    }

    pub fn decode(&self, index: usize) -> WreathElement {
        let m = self.coefficients.size();
        let mut code = index % self.function_count();
        let mut function = vec![0; self.points.len()];
        for v in function.iter_mut().rev() {
            *v = code % m;
            code /= m;
        }
        WreathElement { acting: index / self.function_count(), function }
    }

    /// `(α, f)(β, g) = (αβ, x ↦ f(βx) · g(x))`.
    pub fn multiply(&self, u: &WreathElement, v: &WreathElement) -> WreathElement {
        let function = (0..self.points.len())
            .map(|x| self.coefficients.mul(u.function[self.action[v.acting][x]], v.function[x]))
            .collect();
        WreathElement { acting: self.acting.mul(u.acting, v.acting), function }
    }

    pub fn unit(&self) -> WreathElement {
        WreathElement { acting: self.acting.identity(), function: vec![self.coefficients.identity(); self.points.len()] }
    }

    /// Names like `(s,(a,e))`.
    pub fn element_name(&self, e: &WreathElement) -> String {
        let values: Vec<&str> = e.function.iter().map(|&v| self.coefficients.name(v)).collect();
        format!("({},({}))", self.acting.name(e.acting), values.join(","))
    }

    /// The wreath product `N ∫ M^X` as a validated monoid.
    pub fn wreath(&self) -> Result<FiniteMonoid> {
        let elements: Vec<WreathElement> = (0..self.size()).map(|i| self.decode(i)).collect();
        let table = elements.iter().map(|u| elements.iter().map(|v| self.encode(&self.multiply(u, v))).collect()).collect();
        let names = elements.iter().map(|e| self.element_name(e)).collect();
        FiniteMonoid::new(names, table, self.encode(&self.unit()))
    }
}

/// The wreath product `N ∫ M^X`.
pub fn wreath(data: &WreathData) -> Result<FiniteMonoid> {
    data.wreath()
}

/// `h_*(n, f) = (n, h ∘ f)` for two wreath data sharing `N`, `X` and the
/// action, verified unital and multiplicative on every pair.
pub fn induced_wreath_hom(a: &WreathData, b: &WreathData, h: &MonoidHomomorphism) -> Result<MonoidHomomorphism> {
    if a.acting != b.acting || a.points != b.points || a.action != b.action {
        return Err(Error::NotAHomomorphism("the wreath data do not share N, X and the action".into()));
    }
    if h.source != a.coefficients || h.target != b.coefficients {
        return Err(Error::NotAHomomorphism("h does not go between the coefficient monoids".into()));
    }
    let map = (0..a.size())
        .map(|i| {
            let e = a.decode(i);
            b.encode(&WreathElement { acting: e.acting, function: e.function.iter().map(|&v| h.apply(v)).collect() })
        })
        .collect();
    MonoidHomomorphism::new(a.wreath()?, b.wreath()?, map)
}
