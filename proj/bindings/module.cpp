#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "cyclesep/cage_nest.hpp"
#include "cyclesep/cli.hpp"
#include "cyclesep/cycle_enum.hpp"
#include "cyclesep/embedding.hpp"
#include "cyclesep/envelope.hpp"
#include "cyclesep/export.hpp"
#include "cyclesep/generators.hpp"
#include "cyclesep/oracle.hpp"
#include "cyclesep/separation.hpp"
#include "cyclesep/verify.hpp"

namespace py = pybind11;
using namespace cyclesep;

namespace {

using EmbeddingPtr = std::shared_ptr<Embedding>;

EmbeddingPtr embedding_from_text(const std::string& text) {
    return std::make_shared<Embedding>(Embedding::from_text(text));
}

CycleTuple cycle_of(const Embedding& e, const std::vector<VertexId>& raw) {
    return canonicalize_cycle(e, raw);
}

// Opaque cage-or-nest handle passed back into region/fit/trim calls.
struct Family {
    CageOrNest value;

    bool is_cage() const { return std::holds_alternative<Cage>(value); }
    int size() const {
        return is_cage() ? std::get<Cage>(value).size() : std::get<Nest>(value).size();
    }
    std::vector<VertexId> poles() const { return poles_of(value); }
    std::vector<std::vector<VertexId>> members() const {
        std::vector<std::vector<VertexId>> out;
        if (is_cage()) {
            for (const auto& p : std::get<Cage>(value).paths) out.push_back(p.vertices);
        } else {
            for (const auto& c : std::get<Nest>(value).cycles) out.push_back(c.canonical);
        }
        return out;
    }
};

py::dict envelope_dict(const Embedding& e, const std::vector<VertexId>& seq, int max_len,
                       std::uint64_t budget) {
    MarkedSequence m{seq, max_len};
    EnvelopeData data = build_envelope(e, m, Budget{budget});
    py::dict out;
    py::list per_index;
    for (size_t j = 0; j < seq.size(); ++j) {
        py::dict entry;
        entry["vertex"] = seq[j];
        py::list seps;
        for (const auto& c : data.separators[j]) seps.append(c.canonical);
        entry["separators"] = seps;
        entry["x_set"] = data.x_sets[j];
        entry["external"] = data.externals[j];
        entry["h_set"] = data.h_sets[j];
        entry["env"] = data.envs[j];
        per_index.append(entry);
    }
    out["indices"] = per_index;
    out["nod"] = data.nod ? py::cast(*data.nod) : py::none();
    out["nod_ambiguous"] = data.nod_ambiguous;
    out["env_depends_on_aux"] = data.env_depends_on_aux;
    return out;
}

py::dict gen_dict(const std::string& kind, std::uint64_t seed, int n, bool emit_coords, int rings,
                  int ring_size, int lobes, int paths, int path_len, int spread) {
    GeneratorConfig cfg;
    cfg.kind = gen_kind_from_string(kind);
    cfg.seed = seed;
    cfg.n = n;
    cfg.emit_coords = emit_coords;
    cfg.rings = rings;
    cfg.ring_size = ring_size;
    cfg.lobes = lobes;
    cfg.cage_paths = paths;
    cfg.path_len = path_len;
    cfg.spread = spread;
    GenResult r = gen(cfg);

    py::dict meta;
    meta["insertion_order"] = r.meta.insertion_order;
    meta["marks"] = r.meta.marks;
    meta["rings"] = r.meta.rings;
    meta["cage_paths"] = r.meta.cage_paths;
    if (r.meta.hub) meta["hub"] = *r.meta.hub;
    if (r.meta.poles) {
        meta["poles"] = std::vector<VertexId>{r.meta.poles->first, r.meta.poles->second};
    }

    py::dict out;
    out["document"] = r.document.dump();
    out["meta"] = meta;
    return out;
}

} // namespace

PYBIND11_MODULE(_cyclesep, m) {
    m.doc() = "cycle separation structures on planar embeddings";

    py::register_exception<Error>(m, "Error");

    py::class_<Embedding, EmbeddingPtr>(m, "Embedding")
        .def_static("from_json", &embedding_from_text, py::arg("text"))
        .def_property_readonly("vertex_count", &Embedding::vertex_count)
        .def_property_readonly("edge_count", &Embedding::edge_count)
        .def_property_readonly("face_count", &Embedding::face_count)
        .def_property_readonly("vertices", &Embedding::vertex_ids)
        .def_property_readonly("has_coords", &Embedding::has_coords)
        .def("rotation", &Embedding::rotation_ids, py::arg("vertex"))
        .def("faces",
             [](const Embedding& e) {
                 std::vector<std::vector<VertexId>> out;
                 for (const auto& f : e.faces()) {
                     std::vector<VertexId> boundary;
                     for (const auto& d : f.boundary) boundary.push_back(d.tail);
                     out.push_back(boundary);
                 }
                 return out;
             })
        .def("to_json", [](const Embedding& e) { return e.to_json().dump(); });

    py::class_<Family>(m, "Family")
        .def_property_readonly("is_cage", &Family::is_cage)
        .def_property_readonly("size", &Family::size)
        .def_property_readonly("poles", &Family::poles)
        .def_property_readonly("members", &Family::members);

    m.def(
        "canonical_cycle",
        [](const Embedding& e, const std::vector<VertexId>& raw) {
            return cycle_of(e, raw).canonical;
        },
        py::arg("embedding"), py::arg("cycle"));

    m.def(
        "r_predicate",
        [](const Embedding& e, VertexId a, VertexId b, const std::vector<VertexId>& raw) {
            return r_predicate(e, a, b, raw);
        },
        py::arg("embedding"), py::arg("a"), py::arg("b"), py::arg("cycle"));

    m.def(
        "side_sets",
        [](const Embedding& e, const std::vector<VertexId>& raw, VertexId a) {
            return side_sets(e, cycle_of(e, raw), a);
        },
        py::arg("embedding"), py::arg("cycle"), py::arg("a"));

    m.def(
        "crosses",
        [](const Embedding& e, const std::vector<VertexId>& c1, const std::vector<VertexId>& c2) {
            return crosses(e, cycle_of(e, c1), cycle_of(e, c2));
        },
        py::arg("embedding"), py::arg("c1"), py::arg("c2"));

    m.def(
        "joint_classes",
        [](const Embedding& e, const std::vector<VertexId>& c1, const std::vector<VertexId>& c2) {
            return joint_classes(e, cycle_of(e, c1), cycle_of(e, c2)).classes;
        },
        py::arg("embedding"), py::arg("c1"), py::arg("c2"));

    m.def(
        "complementary_regions",
        [](const Embedding& e, const std::vector<VertexId>& support, int max_len,
           std::uint64_t budget) {
            return complementary_regions(e, support, max_len, Budget{budget}).classes;
        },
        py::arg("embedding"), py::arg("support"), py::arg("max_len"),
        py::arg("budget") = 1000000);

    m.def(
        "verify_non_touching",
        [](const Embedding& e, const std::vector<VertexId>& c1, const std::vector<VertexId>& c2) {
            NonTouchingReport rep = verify_non_touching(e, cycle_of(e, c1), cycle_of(e, c2));
            py::dict out;
            out["all_matched"] = rep.all_matched;
            py::list matched;
            for (const auto& w : rep.matched) {
                py::dict entry;
                entry["region"] = w.region;
                entry["cycle"] = w.witness_cycle;
                entry["vertex"] = w.witness_vertex;
                matched.append(entry);
            }
            out["matched"] = matched;
            out["unmatched"] = rep.unmatched;
            return out;
        },
        py::arg("embedding"), py::arg("c1"), py::arg("c2"));

    m.def(
        "enumerate_cycles",
        [](const Embedding& e, int max_len, const std::vector<VertexId>& through,
           std::uint64_t budget) {
            std::vector<std::vector<VertexId>> out;
            for (const auto& c : enumerate_cycles(e, max_len, through, Budget{budget})) {
                out.push_back(c.canonical);
            }
            return out;
        },
        py::arg("embedding"), py::arg("max_len"), py::arg("through") = std::vector<VertexId>{},
        py::arg("budget") = 1000000);

    m.def(
        "enumerate_paths",
        [](const Embedding& e, VertexId u, VertexId v, int max_len, std::uint64_t budget) {
            std::vector<std::vector<VertexId>> out;
            for (const auto& p : enumerate_paths(e, u, v, max_len, Budget{budget})) {
                out.push_back(p.vertices);
            }
            return out;
        },
        py::arg("embedding"), py::arg("u"), py::arg("v"), py::arg("max_len"),
        py::arg("budget") = 1000000);

    m.def(
        "order_paths",
        [](const Embedding& e, const std::vector<std::vector<VertexId>>& raw) {
            std::vector<PathTuple> paths;
            for (const auto& p : raw) paths.push_back(make_path(e, p));
            return Family{order_family(e, paths)};
        },
        py::arg("embedding"), py::arg("paths"));

    m.def(
        "order_cycles",
        [](const Embedding& e, const std::vector<std::vector<VertexId>>& raw) {
            std::vector<CycleTuple> cycles;
            for (const auto& c : raw) cycles.push_back(cycle_of(e, c));
            return Family{order_family(e, cycles)};
        },
        py::arg("embedding"), py::arg("cycles"));

    m.def(
        "region",
        [](const Embedding& e, const Family& d, int j, int k) {
            return region_of(e, d.value, j, k).vertices;
        },
        py::arg("embedding"), py::arg("family"), py::arg("j"), py::arg("k"));

    m.def(
        "interior",
        [](const Embedding& e, const Family& d) {
            InteriorSets sets = interior(e, d.value);
            return py::make_tuple(sets.interior, sets.exterior, sets.closed_interior);
        },
        py::arg("embedding"), py::arg("family"));

    m.def(
        "fits_into",
        [](const Embedding& e, const std::vector<VertexId>& seq, const Family& d) {
            FitResult fit = fits_into(e, seq, d.value);
            return py::make_tuple(fit.fits, fit.witness);
        },
        py::arg("embedding"), py::arg("seq"), py::arg("family"));

    m.def(
        "trim",
        [](const Embedding& e, const Family& d, const std::vector<int>& keep) {
            return Family{trim(e, d.value, keep)};
        },
        py::arg("embedding"), py::arg("family"), py::arg("keep"));

    m.def("envelope", &envelope_dict, py::arg("embedding"), py::arg("seq"),
          py::arg("max_len") = 12, py::arg("budget") = 1000000);

    m.def(
        "geometric_side",
        [](const Embedding& e, const std::vector<VertexId>& raw, VertexId v) {
            return geometric_oracle(e, cycle_of(e, raw), v) == GeoSide::Inside
                       ? std::string("inside")
                       : std::string("outside");
        },
        py::arg("embedding"), py::arg("cycle"), py::arg("vertex"));

    m.def("gen", &gen_dict, py::arg("kind"), py::arg("seed") = 0, py::arg("n") = 10,
          py::arg("emit_coords") = true, py::arg("rings") = 3, py::arg("ring_size") = 4,
          py::arg("lobes") = 3, py::arg("paths") = 4, py::arg("path_len") = 2,
          py::arg("spread") = 2);

    m.def("property_ids", &property_ids);

    m.def(
        "verify",
        [](const std::string& property, int trials, std::uint64_t seed) {
            PropertyReport report = verify(property, trials, seed);
            py::dict out;
            out["property"] = report.property;
            out["trials"] = report.trials;
            out["checks"] = report.checks;
            out["passed"] = report.passed();
            out["failures"] = report.to_json()["failures"].dump();
            return out;
        },
        py::arg("property"), py::arg("trials") = 200, py::arg("seed") = 0);

    m.def("to_dot", [](const Embedding& e) { return to_dot(e); }, py::arg("embedding"));
    m.def("to_svg", [](const Embedding& e) { return to_svg(e); }, py::arg("embedding"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
