//! Bundled table of nonabelian simple groups of order at most 10^7 with
//! their minimal faithful permutation degrees. Alternating groups and the
//! PSL(2, q) family are generated; the remaining groups in range are listed
//! explicitly. The one order collision among non-isomorphic groups in this
//! range is 20160 (A8 vs PSL(3,4)), resolved by the element-order spectrum.

pub const MAX_TABLE_ORDER: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGroupEntry {
    pub order: u64,
    pub name: &'static str,
    pub min_faithful_degree: usize,
}

/// Groups not covered by the generated alternating / PSL(2,q) families.
/// Minimal degrees are the standard primitive-action degrees.
const EXPLICIT: &[SimpleGroupEntry] = &[
    SimpleGroupEntry { order: 5_616, name: "PSL(3,3)", min_faithful_degree: 13 },
    SimpleGroupEntry { order: 20_160, name: "PSL(3,4)", min_faithful_degree: 21 },
    SimpleGroupEntry { order: 372_000, name: "PSL(3,5)", min_faithful_degree: 31 },
    SimpleGroupEntry { order: 1_876_896, name: "PSL(3,7)", min_faithful_degree: 57 },
    SimpleGroupEntry { order: 6_065_280, name: "PSL(4,3)", min_faithful_degree: 40 },
    SimpleGroupEntry { order: 9_999_360, name: "PSL(5,2)", min_faithful_degree: 31 },
    SimpleGroupEntry { order: 6_048, name: "PSU(3,3)", min_faithful_degree: 28 },
    SimpleGroupEntry { order: 62_400, name: "PSU(3,4)", min_faithful_degree: 65 },
    SimpleGroupEntry { order: 126_000, name: "PSU(3,5)", min_faithful_degree: 50 },
    SimpleGroupEntry { order: 5_663_616, name: "PSU(3,7)", min_faithful_degree: 344 },
    SimpleGroupEntry { order: 5_515_776, name: "PSU(3,8)", min_faithful_degree: 513 },
    SimpleGroupEntry { order: 25_920, name: "PSU(4,2)", min_faithful_degree: 27 },
    SimpleGroupEntry { order: 3_265_920, name: "PSU(4,3)", min_faithful_degree: 112 },
    SimpleGroupEntry { order: 979_200, name: "PSp(4,4)", min_faithful_degree: 85 },
    SimpleGroupEntry { order: 4_680_000, name: "PSp(4,5)", min_faithful_degree: 156 },
    SimpleGroupEntry { order: 1_451_520, name: "PSp(6,2)", min_faithful_degree: 28 },
    SimpleGroupEntry { order: 29_120, name: "Sz(8)", min_faithful_degree: 65 },
    SimpleGroupEntry { order: 4_245_696, name: "G2(3)", min_faithful_degree: 351 },
    SimpleGroupEntry { order: 7_920, name: "M11", min_faithful_degree: 11 },
    SimpleGroupEntry { order: 95_040, name: "M12", min_faithful_degree: 12 },
    SimpleGroupEntry { order: 443_520, name: "M22", min_faithful_degree: 22 },
    SimpleGroupEntry { order: 175_560, name: "J1", min_faithful_degree: 266 },
    SimpleGroupEntry { order: 604_800, name: "J2", min_faithful_degree: 100 },
];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn build_table() -> Vec<SimpleGroupEntry> {
    let mut table: Vec<SimpleGroupEntry> = Vec::new();
    // Alternating groups A5..A10 (A11 exceeds the order bound).
    let alternating_names = ["A5", "A6", "A7", "A8", "A9", "A10"];
    for (i, name) in alternating_names.iter().enumerate() {
        let n = 5 + i as u64;
        let order = factorial(n) / 2;
        if order <= MAX_TABLE_ORDER {
            table.push(SimpleGroupEntry {
                order,
                name,
                min_faithful_degree: n as usize,
            });
        }
    }
    // PSL(2,q) for prime powers q >= 7, skipping the alternating
    // coincidences PSL(2,4) = PSL(2,5) = A5 and PSL(2,9) = A6.
    let psl2_names: &[(u64, &'static str, usize)] = &[
        (7, "PSL(2,7)", 7),
        (8, "PSL(2,8)", 9),
        (11, "PSL(2,11)", 11),
        (13, "PSL(2,13)", 14),
        (16, "PSL(2,16)", 17),
        (17, "PSL(2,17)", 18),
        (19, "PSL(2,19)", 20),
        (23, "PSL(2,23)", 24),
        (25, "PSL(2,25)", 26),
        (27, "PSL(2,27)", 28),
        (29, "PSL(2,29)", 30),
        (31, "PSL(2,31)", 32),
    ];
    for &(q, name, deg) in psl2_names {
        let order = q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 };
        table.push(SimpleGroupEntry {
            order,
            name,
            min_faithful_degree: deg,
        });
    }
    // PSL(2,q) for prime powers 32 <= q <= 271: minimal degree q + 1.
    for q in 32u64..=271 {
        let prime_power = {
            let mut q0 = q;
            let mut p = 2;
            while p * p <= q0 {
                if q0 % p == 0 {
                    while q0 % p == 0 {
                        q0 /= p;
                    }
                    break;
                }
                p += 1;
            }
            q0 == 1 || is_prime(q)
        };
        if !prime_power {
            continue;
        }
        let order = q * (q * q - 1) / if q % 2 == 0 { 1 } else { 2 };
        if order <= MAX_TABLE_ORDER {
            table.push(SimpleGroupEntry {
                order,
                name: "PSL(2,q)",
                min_faithful_degree: (q + 1) as usize,
            });
        }
    }
    table.extend_from_slice(EXPLICIT);
    table.sort_by_key(|e| e.order);
    table
}

static TABLE: once_cell::sync::Lazy<Vec<SimpleGroupEntry>> = once_cell::sync::Lazy::new(build_table);

/// Looks up a nonabelian simple group by order. `has_order_15_element`
/// resolves the A8 / PSL(3,4) ambiguity at order 20160: A8 has an element
/// of order 15, PSL(3,4) does not. The probe is only consulted there.
pub fn identify(order: u64, has_order_15_element: impl FnOnce() -> bool) -> Option<SimpleGroupEntry> {
    let matches: Vec<&SimpleGroupEntry> = TABLE.iter().filter(|e| e.order == order).collect();
    match matches.len() {
        0 => None,
        1 => Some(matches[0].clone()),
        _ => {
            debug_assert_eq!(order, 20_160);
            let name = if has_order_15_element() { "A8" } else { "PSL(3,4)" };
            matches.iter().find(|e| e.name == name).cloned().cloned()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_orders_present() {
        assert_eq!(identify(60, || false).unwrap().name, "A5");
        assert_eq!(identify(60, || false).unwrap().min_faithful_degree, 5);
        assert_eq!(identify(168, || false).unwrap().name, "PSL(2,7)");
        assert_eq!(identify(360, || false).unwrap().name, "A6");
        assert_eq!(identify(2520, || false).unwrap().name, "A7");
        assert_eq!(identify(7920, || false).unwrap().name, "M11");
    }

    #[test]
    fn ambiguous_order_20160() {
        assert_eq!(identify(20_160, || true).unwrap().name, "A8");
        assert_eq!(identify(20_160, || true).unwrap().min_faithful_degree, 8);
        assert_eq!(identify(20_160, || false).unwrap().name, "PSL(3,4)");
        assert_eq!(identify(20_160, || false).unwrap().min_faithful_degree, 21);
    }

    #[test]
    fn unknown_order_absent() {
        assert!(identify(100, || false).is_none());
        assert!(identify(2_000_003, || false).is_none());
    }

    #[test]
    fn only_collision_is_20160() {
        let table = &*TABLE;
        for w in table.windows(2) {
            if w[0].order == w[1].order {
                assert_eq!(w[0].order, 20_160, "unexpected collision at {}", w[0].order);
            }
        }
    }

    #[test]
    fn all_orders_within_bound() {
        assert!(TABLE.iter().all(|e| e.order <= MAX_TABLE_ORDER));
    }
}
