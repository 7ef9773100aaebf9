//! The signed bitableau map `G_∞`: positive letters row-insert into the
//! first component, negative letters (by absolute value) into the second.

use crate::error::{Error, Result};
use crate::group::SignedPermutation;
use crate::young::{Bitableau, YoungTableau};

pub fn g_infinity(w: &SignedPermutation) -> (Bitableau, Bitableau) {
    let mut p = Bitableau::default();
    let mut q = Bitableau::default();
    for (i, &letter) in w.window().iter().enumerate() {
        let step = i as u32 + 1;
        if letter > 0 {
            let cell = p.first.row_insert(letter as u32);
            q.first.place(cell, step);
        } else {
            let cell = p.second.row_insert(letter.unsigned_abs());
            q.second.place(cell, step);
        }
    }
    (p, q)
}

pub fn g_infinity_inverse(p: &Bitableau, q: &Bitableau) -> Result<SignedPermutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    if !p.is_standard() || !q.is_standard() {
        return Err(Error::InvalidTableau(
            "bitableau labels must be 1..=n".into(),
        ));
    }
    let n = q.size();
    let mut p = p.clone();
    let mut q = q.clone();
    let mut window = vec![0i32; n];
    for step in (1..=n as u32).rev() {
        let (component, tableau, sign): (&mut YoungTableau, &mut YoungTableau, i32) =
            if q.first.labels().contains(&step) {
                (&mut q.first, &mut p.first, 1)
            } else {
                (&mut q.second, &mut p.second, -1)
            };
        let (_, cell) = component.pop_max().expect("step label present");
        let x = tableau.reverse_bump(cell)?;
        window[step as usize - 1] = sign * x as i32;
    }
    SignedPermutation::new(window)
}
