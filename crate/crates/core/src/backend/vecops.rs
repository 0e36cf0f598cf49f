use crate::quaternion::Quaternion;

/// `⟨u, v⟩ = v* u = Σ conj(v_i) u_i`.
#[inline]
pub fn inner(u: &[Quaternion], v: &[Quaternion]) -> Quaternion {
    u.iter().zip(v).map(|(&a, &b)| b.conj() * a).sum()
}

#[inline]
pub fn vnorm(x: &[Quaternion]) -> f64 {
    x.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
}

pub fn normalize(x: &mut [Quaternion]) {
    let n = vnorm(x);
    if n > 0.0 {
        x.iter_mut().for_each(|q| *q = q.scale(1.0 / n));
    }
}

/// Removes from `x` its components along each unit vector in `basis`:
/// `x ← x - u·(u* x)`.
pub fn project_out(x: &mut [Quaternion], basis: &[Vec<Quaternion>]) {
    for u in basis {
        let c = inner(x, u);
        for (xi, &ui) in x.iter_mut().zip(u) {
            *xi -= ui * c;
        }
    }
}
