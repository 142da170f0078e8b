use crate::ring::{FiniteRing, RingView};

/// True iff `map` (indexed by elements of `a`) is a bijection onto `b`
/// preserving addition, multiplication and the identity.
pub fn iso_check(a: &FiniteRing, b: &FiniteRing, map: &[u32]) -> bool {
    if a.size() != b.size() || map.len() != a.size() as usize {
        return false;
    }
    let mut seen = vec![false; b.size() as usize];
    for &m in map {
        if m >= b.size() || std::mem::replace(&mut seen[m as usize], true) {
            return false;
        }
    }
    map[a.one_index() as usize] == b.one_index() && preserves_operations(a, b, map)
}

/// Injective, additive, multiplicative and unital; the image need not be all
/// of `b`.
pub fn is_injective_homomorphism(a: &FiniteRing, b: &FiniteRing, map: &[u32]) -> bool {
    if map.len() != a.size() as usize {
        return false;
    }
    let mut image: Vec<u32> = map.to_vec();
    image.sort_unstable();
    image.dedup();
    image.len() == map.len()
        && image.last().is_none_or(|&m| m < b.size())
        && map[a.one_index() as usize] == b.one_index()
        && preserves_operations(a, b, map)
}

fn preserves_operations(a: &FiniteRing, b: &FiniteRing, map: &[u32]) -> bool {
    (0..a.size()).all(|x| {
        (0..a.size()).all(|y| {
            let (fx, fy) = (map[x as usize], map[y as usize]);
            map[a.add_idx(x, y) as usize] == b.add_idx(fx, fy)
                && map[a.mul_idx(x, y) as usize] == b.mul_idx(fx, fy)
        })
    })
}

/// Exhaustive search over bijections fixing 0 and 1; only for tiny rings
/// (at most 8 elements).
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<u32>> {
    let n = a.size();
    if n != b.size() || n > 8 {
        return None;
    }
    let mut map = vec![u32::MAX; n as usize];
    let mut used = vec![false; n as usize];
    map[0] = 0;
    used[0] = true;
    let (oa, ob) = (a.one_index(), b.one_index());
    if oa != 0 {
        if ob == 0 {
            return None;
        }
        map[oa as usize] = ob;
        used[ob as usize] = true;
    }
    fn go(a: &FiniteRing, b: &FiniteRing, k: u32, map: &mut Vec<u32>, used: &mut Vec<bool>) -> bool {
        if k == a.size() {
            return iso_check(a, b, map);
        }
        if map[k as usize] != u32::MAX {
            return go(a, b, k + 1, map, used);
        }
        for t in 0..b.size() {
            if !used[t as usize] {
                used[t as usize] = true;
                map[k as usize] = t;
                if go(a, b, k + 1, map, used) {
                    return true;
                }
                map[k as usize] = u32::MAX;
                used[t as usize] = false;
            }
        }
        false
    }
    go(a, b, 0, &mut map, &mut used).then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{prime_field, product, zmod, Limits};

    #[test]
    fn identity_is_an_isomorphism() {
        let z4 = zmod(4).unwrap();
        assert!(iso_check(&z4, &z4, &[0, 1, 2, 3]));
        assert!(!iso_check(&z4, &z4, &[0, 3, 2, 1]) || z4.mul_idx(3, 3) == 1);
        assert!(!iso_check(&z4, &z4, &[0, 1, 1, 3]));
    }

    #[test]
    fn non_isomorphic_rings_of_equal_size() {
        let f2 = prime_field(2).unwrap();
        let ff = product(&[f2.clone(), f2], &Limits::default()).unwrap();
        let z4 = zmod(4).unwrap();
        assert!(find_isomorphism(&ff, &z4).is_none());
        assert!(find_isomorphism(&z4, &z4).is_some());
    }
}
