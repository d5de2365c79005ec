#pragma once

#include <string>

#include "ringpat/energy.hpp"
#include "ringpat/layout.hpp"
#include "ringpat/solver.hpp"

namespace ringpat::io {

// JSON text formats. Vertices are written as [m, n, ...] rows in the vertex
// order of the complex. Every reader throws RingError(ParseError) on malformed
// input and lets structural errors of the complex propagate.

/// {"squares": [[m,n],...], "vertices": [[m,n],...], "boundary": [[m,n,deg],...]}
std::string complex_to_json(const LatticeComplex& complex);
ComplexPtr complex_from_json(const std::string& text);

/// {"ell0": x, "squares": [[m,n],...], "rho": [[m,n,value],...]}.
/// "squares" may be omitted on input; the complex is then every unit square
/// whose four corners appear in "rho".
std::string field_to_json(const RhoField& field, double ell0 = 1.0);
struct FieldDocument {
    RhoField field;
    double ell0 = 1.0;
};
FieldDocument field_from_json(const std::string& text);

/// {"mode": "dirichlet", "values": [[m,n,rho],...]} or
/// {"mode": "neumann", "phi": [[m,n,phi],...], "gauge": [m,n]}
std::string boundary_to_json(const BoundaryConditions& bc);
BoundaryConditions boundary_from_json(const std::string& text);

/// Field document plus "centers": [[m,n,x,y],...] and
/// "face_points": [[m,n,x,y],...] keyed by the lower-left corner of each square.
std::string pattern_to_json(const PlanarPattern& pattern);
PlanarPattern pattern_from_json(const std::string& text);

/// True if the document carries layout data ("centers").
bool has_centers(const std::string& text);

std::string solve_report_to_json(const SolveReport& report);
std::string verify_report_to_json(const VerifyReport& report);
std::string energy_report_to_json(const EnergyReport& report);

}  // namespace ringpat::io
