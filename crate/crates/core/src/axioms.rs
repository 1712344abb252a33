//! The defining identities, evaluated exactly on given elements. Each check
//! returns the names of the identities that fail.

use crate::admissible::CPoly;
use crate::linear::Combo;

/// GDN-Poisson identities for a product `·` and a product `∘` on
/// combinations.
pub fn gdnp_violations<K, D, C>(x: &Combo<K>, y: &Combo<K>, z: &Combo<K>, dot: D, circ: C) -> Vec<&'static str>
where
    K: Ord + Clone,
    D: Fn(&Combo<K>, &Combo<K>) -> Combo<K>,
    C: Fn(&Combo<K>, &Combo<K>) -> Combo<K>,
{
    let mut bad = Vec::new();
    let assoc = |a: &Combo<K>, b: &Combo<K>, c: &Combo<K>| &circ(a, &circ(b, c)) - &circ(&circ(a, b), c);
    if assoc(x, y, z) != assoc(y, x, z) {
        bad.push("left symmetry");
    }
    if circ(&circ(x, y), z) != circ(&circ(x, z), y) {
        bad.push("right commutativity");
    }
    if dot(x, y) != dot(y, x) {
        bad.push("commutativity of ·");
    }
    if dot(&dot(x, y), z) != dot(x, &dot(y, z)) {
        bad.push("associativity of ·");
    }
    if circ(&dot(x, y), z) != dot(x, &circ(y, z)) {
        bad.push("(x·y)∘z = x·(y∘z)");
    }
    let lhs = &dot(&circ(x, y), z) - &circ(x, &dot(y, z));
    let rhs = &dot(&circ(y, x), z) - &circ(y, &dot(x, z));
    if lhs != rhs {
        bad.push("(x∘y)·z − x∘(y·z) = (y∘x)·z − y∘(x·z)");
    }
    bad
}

/// The identities of a special GDN-Poisson admissible algebra, checked in
/// `kC[X]`.
pub fn admissible_violations(x: &CPoly, y: &CPoly, z: &CPoly) -> Vec<&'static str> {
    let mut bad = Vec::new();
    if x.dot(y) != y.dot(x) {
        bad.push("commutativity of ·");
    }
    if x.dot(y).dot(z) != x.dot(&y.dot(z)) {
        bad.push("associativity of ·");
    }
    if x.star(y) != y.star(x) {
        bad.push("commutativity of ∗");
    }
    if x.star(y).star(z) != x.star(&y.star(z)) {
        bad.push("associativity of ∗");
    }
    if &x.dot(&CPoly::unit_poly()) != x {
        bad.push("unit of ·");
    }
    if x.dot(y).star(z) != x.dot(&y.star(z)) {
        bad.push("(x·y)∗z = x·(y∗z)");
    }
    if x.star(y).derive() != &x.derive().star(y) + &x.star(&y.derive()) {
        bad.push("D(x∗y) = Dx∗y + x∗Dy");
    }
    let de = CPoly::unit_poly().derive();
    let twisted = &(&x.derive().dot(y) + &x.dot(&y.derive())) - &x.dot(y).dot(&de);
    if x.dot(y).derive() != twisted {
        bad.push("D(x·y) = Dx·y + x·Dy − x·y·De");
    }
    bad
}
