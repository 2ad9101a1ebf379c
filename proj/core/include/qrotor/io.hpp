#pragma once

#include <iosfwd>
#include <string>

#include "qrotor/evolution.hpp"
#include "qrotor/flux.hpp"
#include "qrotor/rotor_state.hpp"
#include "qrotor/wigner.hpp"

namespace qrotor::io {

/// Shortest-free 17-significant-digit rendering; parses back to the same double.
std::string format_double(double value);

/// Header `D,<D>`, then `s,r,value` rows, s outer and r inner in [-2l, 2l+1].
void write_wigner_csv(std::ostream& out, const WignerGrid& grid);
WignerGrid read_wigner_csv(std::istream& in);

/// Header `D,<D>`, then `a,b,value` rows.
void write_representative_csv(std::ostream& out, const RepresentativeGrid& grid);
RepresentativeGrid read_representative_csv(std::istream& in);

/// Header `D,<D>`, then `axis,index,probability` rows for momentum r and angle s.
void write_marginals_csv(std::ostream& out, const WignerGrid& grid);

/// Header `j,autocorrelation`.
void write_revival_csv(std::ostream& out, const RevivalScan& scan);

/// Header `D,<D>`, then `m,re,im` rows.
void write_state_csv(std::ostream& out, const RotorState& state);

/// JSON document mirroring the AdmissibilityReport fields.
std::string admissibility_json(const AdmissibilityReport& report);

/// Plain PGM (P2), maxval 65535, rows r = 2l+1 down to -2l, columns s = 0..2D-1.
/// Pixel = round((value - offset) * scale); offset and scale go to `sidecar`.
void write_graymap(std::ostream& image, std::ostream& sidecar, const WignerGrid& grid);

}  // namespace qrotor::io
