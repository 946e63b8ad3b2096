#ifndef TESLERFORGE_JSON_IO_HPP
#define TESLERFORGE_JSON_IO_HPP

#include <json.hpp>

#include "teslerforge/core.hpp"
#include "teslerforge/defcone.hpp"
#include "teslerforge/flow.hpp"
#include "teslerforge/polyhedra.hpp"

namespace teslerforge::io {

using json = nlohmann::json;

// Rationals travel as strings "p" or "p/q"; matrices as {"n": n, "rows":
// [...]} with row i holding entries (i,i)..(i,n). The tilde form is the
// same with the final (n,n)-only row omitted. Readers throw parse_error
// on malformed input; writers emit canonical forms only.

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json rat_vector_to_json(const RatVector& v);
RatVector rat_vector_from_json(const json& j);

json upper_tri_to_json(const UpperTri& m);
UpperTri upper_tri_from_json(const json& j);

json tilde_upper_tri_to_json(const TildeUpperTri& b);
TildeUpperTri tilde_upper_tri_from_json(const json& j);

HookVector hook_vector_from_json(const json& j);

json net_flow_to_json(const flow::NetFlow& a);
flow::NetFlow net_flow_from_json(const json& j);

json hrep_to_json(const polyhedra::HRep& h);
polyhedra::HRep hrep_from_json(const json& j);

json vrep_to_json(const polyhedra::VRep& v);
polyhedra::VRep vrep_from_json(const json& j);

json deforming_vector_to_json(const defcone::DeformingVector& dv);
defcone::DeformingVector deforming_vector_from_json(const json& j);

json face_index_to_json(const defcone::FaceIndex& f);
json tesler_compare_to_json(const defcone::TeslerCompare& c);
json deform_check_to_json(const polyhedra::DeformCheck& c);
json flow_verdict_to_json(const flow::FlowVerdict& v);

}  // namespace teslerforge::io

#endif
