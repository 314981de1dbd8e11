#ifndef ILAB_TABLES_HPP
#define ILAB_TABLES_HPP

#include "ilab/form.hpp"
#include "ilab/liealg.hpp"

namespace ilab::tables {

// Defining forms of the flat structures, exact integer coefficients.
FormQ sigmaR4();    // dx^{12} + dx^{34}
FormQ psiR4();      // Re (dx^1+i dx^2)^(dx^3+i dx^4)
FormQ psiHatR4();   // Im (dx^1+i dx^2)^(dx^3+i dx^4)
FormQ phiR7();      // associative 3-form
FormQ starPhiR7();  // its printed dual 4-form (literal transcription)
FormQ cayleyR8();   // Phi = phi ^ dx^8 + *phi, on R^8

FormQ kahlerR6();    // dx^{12} + dx^{34} + dx^{56}
FormQ holVolReR6();  // Re (dx^1+i dx^2)^(dx^3+i dx^4)^(dx^5+i dx^6)
FormQ holVolImR6();  // Im of the same

/// Kahler triple sigma_1, sigma_2, sigma_3 on R^{4n} (i in 1..3).
FormQ sigmaI(int i, int nq);
/// Fundamental 4-form (sigma_1^2 + sigma_2^2 + sigma_3^2)/2 on R^{4n}.
FormQ fundamental4Form(int nq);

// Printed matrix/2-form bases, stored verbatim. The su(2) forms carry
// scale 2 (beta_j = 2 iso(e_j)); g2 and spin(7) carry scale 1. The two
// defective spin(7) matrix entries (e_3, e_14) are stored in the repaired
// form consistent with iso applied to the printed beta_3, beta_14.
const LieSubalgebra& su2Table();
const LieSubalgebra& g2Table();
const LieSubalgebra& spin7Table();

}  // namespace ilab::tables

#endif  // ILAB_TABLES_HPP
