/*
 * Copyright 2026 The Frobius Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "frobius/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace frob {

Normalization parse_normalization(const std::string &text) {
    if (text == "integral") return Normalization::Integral;
    if (text == "maschke") return Normalization::Maschke;
    if (text == "unitary") return Normalization::Unitary;
    throw parse_error("unknown normalization '" + text + "'", 0);
}

std::string normalization_to_string(Normalization n) {
    switch (n) {
        case Normalization::Integral: return "integral";
        case Normalization::Maschke: return "maschke";
        case Normalization::Unitary: return "unitary";
    }
    return "?";
}

namespace {

FieldScalar one_of(const FieldDescriptor &F) { return FieldScalar::one(F); }

} // namespace

// --- Phases ----------------------------------------------------------------

namespace {

// chi_p(g) for a cyclic basis group: zeta_q^(a * index) with p = a/q.
FieldScalar cyclic_character_value(const FieldDescriptor &F, const Phase &p, int64_t index) {
    int64_t q = static_cast<int64_t>(denominator(p));
    int64_t a = static_cast<int64_t>(numerator(p));
    return zeta(q, F).pow(a * index);
}

} // namespace

Matrix GroupAlgebraModel::green_phase(const Phase &angle) const {
    int64_t D = dim();
    Matrix M(D, D, field);
    Phase p = canonical_phase(angle);
    if (basis_group.factors.size() <= 1) {
        for (int64_t g = 0; g < D; ++g) M.at(g, g) = cyclic_character_value(field, p, g);
        return M;
    }
    auto e = element_from_angle(basis_group, p);
    if (!e) throw domain_error("phase " + std::to_string((double)(Rat)p) + " is not an element angle of " +
                               basis_group.to_string());
    for (int64_t gi = 0; gi < D; ++gi) {
        GroupElement g = element_from_index(basis_group, gi);
        FieldScalar v = one_of(field);
        for (size_t i = 0; i < basis_group.factors.size(); ++i)
            v = v * zeta(basis_group.factors[i], field).pow(e->coords[i] * g.coords[i]);
        M.at(gi, gi) = v;
    }
    return M;
}

Matrix GroupAlgebraModel::character_matrix() const {
    int64_t D = dim();
    Matrix F(D, D, field);
    for (int64_t gi = 0; gi < D; ++gi) {
        GroupElement g = element_from_index(basis_group, gi);
        for (int64_t ki = 0; ki < D; ++ki) {
            GroupElement k = element_from_index(basis_group, ki);
            FieldScalar v = one_of(field);
            if (basis_group.factors.empty()) {
                F.at(gi, ki) = v;
                continue;
            }
            for (size_t i = 0; i < basis_group.factors.size(); ++i)
                v = v * zeta(basis_group.factors[i], field).pow(k.coords[i] * g.coords[i]);
            F.at(gi, ki) = v;
        }
    }
    return F;
}

Matrix GroupAlgebraModel::red_phase(const Phase &angle) const {
    int64_t D = dim();
    Phase p = canonical_phase(angle);
    if (auto k = element_from_angle(basis_group, p)) {
        // basis-group element: the shift permutation, exact in any field
        Matrix M(D, D, field);
        for (int64_t g = 0; g < D; ++g) {
            GroupElement e = group_add(basis_group, element_from_index(basis_group, g), *k);
            M.at(element_index(basis_group, e), g) = one_of(field);
        }
        return M;
    }
    // general angle: conjugate the green phase by the character matrix
    Matrix F = character_matrix();
    Matrix Finv(D, D, field);
    FieldScalar invD = FieldScalar::from_int(field, D).inverse();
    for (int64_t ki = 0; ki < D; ++ki) {
        GroupElement k = element_from_index(basis_group, ki);
        for (int64_t gi = 0; gi < D; ++gi) {
            GroupElement mg = group_neg(basis_group, element_from_index(basis_group, gi));
            FieldScalar v = invD;
            for (size_t i = 0; i < basis_group.factors.size(); ++i)
                v = v * zeta(basis_group.factors[i], field).pow(k.coords[i] * mg.coords[i]);
            Finv.at(ki, gi) = v;
        }
    }
    // conjugating the negated green diagonal matches the shift convention:
    // red_phase(angle of k) is the shift by +k
    return F.compose(green_phase(canonical_phase(-p))).compose(Finv);
}

Matrix GroupAlgebraModel::structure(NodeType color, bool mul_side, bool arity_two) const {
    if (color == NodeType::Green) {
        if (mul_side) return arity_two ? green_mul : green_unit;
        return arity_two ? green_comul : green_counit;
    }
    if (mul_side) return arity_two ? red_mul : red_unit;
    return arity_two ? red_comul : red_counit;
}

Matrix GroupAlgebraModel::spider_matrix(NodeType color, int m, int n, const Phase &angle) const {
    int64_t D = dim();
    bool green = color == NodeType::Green;
    const Matrix &mul = green ? green_mul : red_mul;
    const Matrix &unit = green ? green_unit : red_unit;
    const Matrix &comul = green ? green_comul : red_comul;
    const Matrix &counit = green ? green_counit : red_counit;
    // collapse m legs to one
    Matrix in_tower = m == 0 ? unit : Matrix::identity(D, field);
    for (int k = 1; k < m; ++k) in_tower = mul.compose(in_tower.tensor(Matrix::identity(D, field)));
    Matrix out_tower = n == 0 ? counit : Matrix::identity(D, field);
    for (int k = 1; k < n; ++k) out_tower = out_tower.tensor(Matrix::identity(D, field)).compose(comul);
    Matrix core = Matrix::identity(D, field);
    if (angle != 0) core = green ? green_phase(angle) : red_phase(angle);
    return out_tower.compose(core.compose(in_tower));
}

// --- Model construction ----------------------------------------------------

GroupAlgebraModel build_model(const AbelianGroup &g, const FieldDescriptor &F_in, Normalization norm) {
    FieldDescriptor F = F_in;
    int64_t D = g.order();
    if (F.characteristic() != 0 && D % F.characteristic() == 0)
        throw domain_error("field characteristic " + std::to_string(F.characteristic()) +
                           " divides the group order " + std::to_string(D));
    FieldScalar root_D = FieldScalar::one(F);
    if (norm == Normalization::Unitary) {
        try {
            root_D = sqrt_dim(D, F);
        } catch (const domain_error &) {
            if (F.kind != FieldKind::Cyclotomic) throw;
            F = FieldDescriptor::cyclotomic(cyclotomic_order_for_sqrt(D, F.param));
            root_D = sqrt_dim(D, F);
        }
    }

    GroupAlgebraModel m;
    m.basis_group = g;
    m.field = F;
    m.normalization = norm;
    FieldScalar one = FieldScalar::one(F);
    FieldScalar Ds = FieldScalar::from_int(F, D);

    m.green_comul = Matrix(D * D, D, F);
    m.green_counit = Matrix(1, D, F);
    m.green_mul = Matrix(D, D * D, F);
    m.green_unit = Matrix(D, 1, F);
    for (int64_t x = 0; x < D; ++x) {
        m.green_comul.at(x * D + x, x) = one;
        m.green_counit.at(0, x) = one;
        m.green_mul.at(x, x * D + x) = one;
        m.green_unit.at(x, 0) = one;
    }

    m.red_mul = Matrix(D, D * D, F);
    m.red_comul = Matrix(D * D, D, F);
    m.red_unit = Matrix(D, 1, F);
    m.red_counit = Matrix(1, D, F);
    int64_t e_idx = element_index(g, group_zero(g));
    for (int64_t x = 0; x < D; ++x)
        for (int64_t y = 0; y < D; ++y) {
            GroupElement s = group_add(g, element_from_index(g, x), element_from_index(g, y));
            int64_t z = element_index(g, s);
            m.red_mul.at(z, x * D + y) = one;
            m.red_comul.at(x * D + y, z) = one;
        }
    m.red_unit.at(e_idx, 0) = one;
    m.red_counit.at(0, e_idx) = one;
    switch (norm) {
        case Normalization::Integral: break;
        case Normalization::Maschke: {
            m.red_comul = m.red_comul.scale(Ds.inverse());
            m.red_counit = m.red_counit.scale(Ds);
            break;
        }
        case Normalization::Unitary: {
            FieldScalar inv_root = root_D.inverse();
            m.red_mul = m.red_mul.scale(inv_root);
            m.red_comul = m.red_comul.scale(inv_root);
            m.red_unit = m.red_unit.scale(root_D);
            m.red_counit = m.red_counit.scale(root_D);
            break;
        }
    }

    m.antipode = Matrix(D, D, F);
    for (int64_t x = 0; x < D; ++x)
        m.antipode.at(element_index(g, group_neg(g, element_from_index(g, x))), x) = one;

    // build-time invariant checks
    Matrix id = Matrix::identity(D, F);
    auto expect = [](bool ok, const std::string &what) {
        if (!ok) throw error("model invariant failed: " + what);
    };
    expect(m.green_mul.compose(m.green_comul) == id, "green specialness");
    expect(m.green_mul.compose(m.green_unit.tensor(id)) == id, "green unit law");
    expect(m.green_counit.tensor(id).compose(m.green_comul).scalar_multiple_of(id) == one, "green counit law");
    expect(m.red_mul.compose(m.red_unit.tensor(id)) == id, "red unit law");
    expect(m.red_counit.tensor(id).compose(m.red_comul) == id, "red counit law");
    Matrix red_sp = m.red_mul.compose(m.red_comul);
    if (norm == Normalization::Integral) expect(red_sp == id.scale(Ds), "red quasi-specialness");
    else expect(red_sp == id, "red specialness");
    expect(m.antipode.compose(m.antipode) == id, "antipode involution");
    expect(m.red_mul.compose(swap_matrix(D, F)) == m.red_mul, "red commutativity");
    return m;
}

GroupAlgebraModel parse_model_descriptor(const std::string &text) {
    size_t at = text.find('@');
    size_t slash = text.find('/', at == std::string::npos ? 0 : at);
    if (at == std::string::npos || slash == std::string::npos)
        throw parse_error("model descriptor must look like Z3@cyclo(12)/unitary", 0);
    AbelianGroup g = parse_group(text.substr(0, at));
    FieldDescriptor F = parse_field_descriptor(text.substr(at + 1, slash - at - 1));
    Normalization norm = parse_normalization(text.substr(slash + 1));
    return build_model(g, F, norm);
}

// --- Evaluation ------------------------------------------------------------

namespace {

struct Tensor {
    std::vector<EdgeId> legs; // all dimensions equal D; legs[0] most significant
    std::vector<FieldScalar> data;
};

constexpr int64_t kMaxTensorSize = 1 << 22;

int64_t pow_i(int64_t b, int64_t e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// contracts duplicate legs (self-loops) within one tensor
Tensor self_trace(Tensor t, int64_t D, const FieldDescriptor &F) {
    while (true) {
        int dup_a = -1, dup_b = -1;
        for (size_t i = 0; i < t.legs.size() && dup_a < 0; ++i)
            for (size_t j = i + 1; j < t.legs.size(); ++j)
                if (t.legs[i] == t.legs[j]) {
                    dup_a = static_cast<int>(i);
                    dup_b = static_cast<int>(j);
                    break;
                }
        if (dup_a < 0) return t;
        Tensor r;
        for (size_t i = 0; i < t.legs.size(); ++i)
            if (static_cast<int>(i) != dup_a && static_cast<int>(i) != dup_b) r.legs.push_back(t.legs[i]);
        int64_t R = pow_i(D, r.legs.size());
        r.data.assign(R, FieldScalar::zero(F));
        std::vector<int64_t> idx(t.legs.size(), 0);
        for (int64_t flat = 0; flat < pow_i(D, t.legs.size()); ++flat) {
            int64_t rem = flat;
            for (size_t i = t.legs.size(); i-- > 0;) {
                idx[i] = rem % D;
                rem /= D;
            }
            if (idx[dup_a] != idx[dup_b]) continue;
            int64_t ro = 0;
            for (size_t i = 0; i < t.legs.size(); ++i)
                if (static_cast<int>(i) != dup_a && static_cast<int>(i) != dup_b) ro = ro * D + idx[i];
            r.data[ro] = r.data[ro] + t.data[flat];
        }
        t = std::move(r);
    }
}

Tensor contract(const Tensor &a, const Tensor &b, int64_t D, const FieldDescriptor &F) {
    std::vector<size_t> shared_a, shared_b;
    std::vector<size_t> only_a, only_b;
    for (size_t i = 0; i < a.legs.size(); ++i) {
        auto it = std::find(b.legs.begin(), b.legs.end(), a.legs[i]);
        if (it != b.legs.end()) {
            shared_a.push_back(i);
            shared_b.push_back(static_cast<size_t>(it - b.legs.begin()));
        } else {
            only_a.push_back(i);
        }
    }
    for (size_t i = 0; i < b.legs.size(); ++i)
        if (std::find(a.legs.begin(), a.legs.end(), b.legs[i]) == a.legs.end()) only_b.push_back(i);

    Tensor r;
    for (size_t i : only_a) r.legs.push_back(a.legs[i]);
    for (size_t i : only_b) r.legs.push_back(b.legs[i]);
    int64_t R = pow_i(D, r.legs.size());
    if (R > kMaxTensorSize) throw domain_error("contraction frontier too large for evaluation");
    r.data.assign(R, FieldScalar::zero(F));
    int64_t S = pow_i(D, shared_a.size());

    std::vector<int64_t> va(a.legs.size(), 0), vb(b.legs.size(), 0);
    for (int64_t ro = 0; ro < R; ++ro) {
        int64_t rem = ro;
        std::vector<int64_t> rv(r.legs.size(), 0);
        for (size_t i = r.legs.size(); i-- > 0;) {
            rv[i] = rem % D;
            rem /= D;
        }
        FieldScalar acc = FieldScalar::zero(F);
        for (int64_t sh = 0; sh < S; ++sh) {
            int64_t srem = sh;
            std::vector<int64_t> sv(shared_a.size(), 0);
            for (size_t i = shared_a.size(); i-- > 0;) {
                sv[i] = srem % D;
                srem /= D;
            }
            for (size_t i = 0; i < only_a.size(); ++i) va[only_a[i]] = rv[i];
            for (size_t i = 0; i < shared_a.size(); ++i) va[shared_a[i]] = sv[i];
            for (size_t i = 0; i < only_b.size(); ++i) vb[only_b[i]] = rv[only_a.size() + i];
            for (size_t i = 0; i < shared_b.size(); ++i) vb[shared_b[i]] = sv[i];
            int64_t ia = 0, ib = 0;
            for (size_t i = 0; i < va.size(); ++i) ia = ia * D + va[i];
            for (size_t i = 0; i < vb.size(); ++i) ib = ib * D + vb[i];
            if (a.data[ia].is_zero() || b.data[ib].is_zero()) continue;
            acc = acc + a.data[ia] * b.data[ib];
        }
        r.data[ro] = acc;
    }
    return r;
}

Tensor node_tensor(const Diagram &d, NodeId nid, const GroupAlgebraModel &m) {
    const Node &nd = d.node(nid);
    int64_t D = m.dim();
    Matrix S = nd.type == NodeType::Antipode ? m.antipode : m.spider_matrix(nd.type, nd.m, nd.n, nd.phase);
    int mm = nd.type == NodeType::Antipode ? 1 : nd.m;
    int nn = nd.type == NodeType::Antipode ? 1 : nd.n;
    Tensor t;
    for (int p = 0; p < mm + nn; ++p) {
        auto es = d.edges_at({nid, p});
        if (es.size() != 1 && !(es.size() == 2 && es[0] == es[1]))
            throw domain_error("node port with degree != 1 during evaluation");
        t.legs.push_back(es[0]);
    }
    int64_t total = pow_i(D, mm + nn);
    if (total > kMaxTensorSize) throw domain_error("node tensor too large for evaluation");
    t.data.assign(total, FieldScalar::zero(m.field));
    for (int64_t flat = 0; flat < total; ++flat) {
        // legs ordered inputs then outputs, each most-significant-first
        int64_t rem = flat;
        std::vector<int64_t> v(mm + nn, 0);
        for (int i = mm + nn; i-- > 0;) {
            v[i] = rem % D;
            rem /= D;
        }
        int64_t col = 0, row = 0;
        for (int i = 0; i < mm; ++i) col = col * D + v[i];
        for (int i = 0; i < nn; ++i) row = row * D + v[mm + i];
        t.data[flat] = S.at(row, col);
    }
    return self_trace(std::move(t), D, m.field);
}

} // namespace

Matrix eval(const Diagram &d, const GroupAlgebraModel &m) {
    int64_t D = m.dim();
    const FieldDescriptor &F = m.field;
    std::vector<NodeId> remaining;
    for (const auto &[nid, nd] : d.nodes)
        if (nd.type != NodeType::Boundary) remaining.push_back(nid);

    Tensor acc;
    acc.data.assign(1, FieldScalar::one(F));
    while (!remaining.empty()) {
        // greedy: absorb the node minimizing the size of the open frontier
        // afterwards (ties: most contracted legs), keeping intermediate
        // tensors small on chain- and tree-shaped diagrams
        size_t best = 0;
        int64_t best_frontier = std::numeric_limits<int64_t>::max();
        int64_t best_shared = -1;
        for (size_t i = 0; i < remaining.size(); ++i) {
            auto incident = d.edges_at_node(remaining[i]);
            // self-loop edges appear twice and contract internally
            std::set<EdgeId> uniq(incident.begin(), incident.end());
            int64_t shared = 0;
            for (EdgeId e : uniq)
                if (std::find(acc.legs.begin(), acc.legs.end(), e) != acc.legs.end()) shared++;
            int64_t frontier = static_cast<int64_t>(acc.legs.size()) - shared +
                               (static_cast<int64_t>(uniq.size()) - shared);
            if (frontier < best_frontier || (frontier == best_frontier && shared > best_shared)) {
                best_frontier = frontier;
                best_shared = shared;
                best = i;
            }
        }
        NodeId pick = remaining[best];
        remaining.erase(remaining.begin() + best);
        acc = contract(acc, node_tensor(d, pick, m), D, F);
    }

    // assemble the boundary matrix
    int64_t in_n = d.n_inputs(), out_n = d.n_outputs();
    Matrix M(pow_i(D, out_n), pow_i(D, in_n), F);
    // leg -> owning boundary (input index or ~output index)
    std::map<NodeId, int64_t> owner; // boundary node -> slot (inputs first)
    for (int64_t i = 0; i < in_n; ++i) owner[d.inputs[i]] = i;
    for (int64_t j = 0; j < out_n; ++j) owner[d.outputs[j]] = in_n + j;
    std::vector<int64_t> leg_slot(acc.legs.size(), -1);
    for (size_t i = 0; i < acc.legs.size(); ++i) {
        const Edge &e = d.edges.at(acc.legs[i]);
        NodeId bnd = d.node(e.a.node).type == NodeType::Boundary ? e.a.node : e.b.node;
        if (d.node(bnd).type != NodeType::Boundary) throw error("open leg without boundary endpoint");
        leg_slot[i] = owner.at(bnd);
    }
    // bare boundary-to-boundary wires
    std::vector<std::pair<int64_t, int64_t>> bare;
    for (const auto &[eid, e] : d.edges) {
        if (d.node(e.a.node).type != NodeType::Boundary || d.node(e.b.node).type != NodeType::Boundary) continue;
        bare.push_back({owner.at(e.a.node), owner.at(e.b.node)});
    }
    FieldScalar loop_factor = FieldScalar::from_int(F, D).pow(d.bare_loops);

    std::vector<int64_t> slot_val(in_n + out_n, 0);
    for (int64_t row = 0; row < M.rows(); ++row) {
        int64_t rrem = row;
        for (int64_t j = out_n; j-- > 0;) {
            slot_val[in_n + j] = rrem % D;
            rrem /= D;
        }
        for (int64_t col = 0; col < M.cols(); ++col) {
            int64_t crem = col;
            for (int64_t i = in_n; i-- > 0;) {
                slot_val[i] = crem % D;
                crem /= D;
            }
            bool zero = false;
            for (const auto &[sa, sb] : bare)
                if (slot_val[sa] != slot_val[sb]) {
                    zero = true;
                    break;
                }
            if (zero) continue;
            int64_t flat = 0;
            for (size_t i = 0; i < acc.legs.size(); ++i) flat = flat * D + slot_val[leg_slot[i]];
            M.at(row, col) = acc.data[flat] * loop_factor;
        }
    }
    return M;
}

// --- Soundness -------------------------------------------------------------

std::string SoundnessReport::to_string() const {
    std::ostringstream os;
    for (const auto &e : entries) os << "rule " << e.rule << " " << e.verdict << "\n";
    return os.str();
}

SoundnessReport check_rule_soundness(const RuleSet &rs, const GroupAlgebraModel &m) {
    SoundnessReport rep;
    for (const auto &r : rs.rules) {
        SoundnessReport::Entry entry;
        entry.rule = r.name;
        Matrix l = eval(r.lhs, m);
        Matrix rmat = eval(r.rhs, m);
        auto c = l.scalar_multiple_of(rmat);
        if (!c) {
            entry.verdict = "FAIL";
            entry.fail = true;
            rep.any_fail = true;
            rep.all_exact = false;
        } else if (c->is_one()) {
            entry.verdict = "exact";
            entry.exact = true;
        } else {
            entry.verdict = "scalar " + c->to_string();
            rep.all_exact = false;
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

// --- Set-like points and predicates ----------------------------------------

std::vector<Matrix> set_like(const GroupAlgebraModel &m, NodeType color) {
    int64_t D = m.dim();
    std::vector<Matrix> out;
    if (color == NodeType::Green) {
        for (int64_t g = 0; g < D; ++g) {
            Matrix v(D, 1, m.field);
            v.at(g, 0) = FieldScalar::one(m.field);
            out.push_back(v);
        }
        return out;
    }
    FieldScalar scale = FieldScalar::one(m.field);
    if (m.normalization == Normalization::Maschke) scale = FieldScalar::from_int(m.field, D).inverse();
    if (m.normalization == Normalization::Unitary) scale = sqrt_dim(D, m.field).inverse();
    for (const auto &chi : characters(m.basis_group, m.field)) {
        Matrix v(D, 1, m.field);
        for (int64_t g = 0; g < D; ++g)
            v.at(g, 0) = scale * chi.value(element_from_index(m.basis_group, g));
        if (!is_setlike(m, NodeType::Red, v)) throw error("character vector fails the set-like equation");
        out.push_back(v);
    }
    return out;
}

namespace {

// s tensored with itself until it acts on a space of the given dimension
Matrix antipode_power(const GroupAlgebraModel &m, int64_t dim_needed) {
    Matrix s = Matrix::identity(1, m.field);
    int64_t d = 1;
    while (d < dim_needed) {
        s = s.tensor(m.antipode);
        d *= m.dim();
    }
    if (d != dim_needed) throw domain_error("matrix dimension is not a power of the model dimension");
    return s;
}

} // namespace

Matrix color_transpose(const GroupAlgebraModel &m, NodeType color, const Matrix &M) {
    if (color == NodeType::Green) return M.transpose();
    return antipode_power(m, M.cols()).compose(M.transpose()).compose(antipode_power(m, M.rows()));
}

Matrix color_conjugate(const GroupAlgebraModel &m, NodeType color, const Matrix &M) {
    if (color == NodeType::Green) return M.conjugate();
    return antipode_power(m, M.rows()).compose(M.conjugate()).compose(antipode_power(m, M.cols()));
}

bool is_color_real(const GroupAlgebraModel &m, NodeType color, const Matrix &M) {
    return M == color_conjugate(m, color, M);
}

bool is_unitary_matrix(const GroupAlgebraModel &m, const Matrix &M) {
    if (M.rows() != M.cols()) return false;
    return M.compose(M.dagger()) == Matrix::identity(M.rows(), m.field) &&
           M.dagger().compose(M) == Matrix::identity(M.rows(), m.field);
}

bool is_unbiased(const GroupAlgebraModel &m, NodeType color, const Matrix &point) {
    if (point.cols() != 1 || point.rows() != m.dim()) throw domain_error("unbiasedness needs a point");
    bool green = color == NodeType::Green;
    const Matrix &mul = green ? m.green_mul : m.red_mul;
    const Matrix &unit = green ? m.green_unit : m.red_unit;
    Matrix u = mul.compose(point.tensor(color_conjugate(m, color, point)));
    auto c = unit.scalar_multiple_of(u);
    return c && !c->is_zero() && !u.is_zero();
}

bool is_setlike(const GroupAlgebraModel &m, NodeType color, const Matrix &point) {
    if (point.cols() != 1 || point.rows() != m.dim()) throw domain_error("set-likeness needs a point");
    const Matrix &comul = color == NodeType::Green ? m.green_comul : m.red_comul;
    return comul.compose(point) == point.tensor(point);
}

bool is_phase(const GroupAlgebraModel &m, NodeType color, const Matrix &M) {
    if (M.rows() != m.dim() || M.cols() != m.dim()) throw domain_error("phases are 1->1");
    const Matrix &mul = color == NodeType::Green ? m.green_mul : m.red_mul;
    Matrix id = Matrix::identity(m.dim(), m.field);
    return mul.compose(M.tensor(id)) == M.compose(mul) && is_unitary_matrix(m, M);
}

// --- Internal integers -----------------------------------------------------

Matrix internal_integer_matrix(const GroupAlgebraModel &m, int64_t n) {
    // matrix-level convolution recursion; by functoriality of eval this equals
    // eval(internal_integer_diagram(n), m) (cross-checked in the tests) while
    // staying cheap for large |n|
    int64_t k = n < 0 ? -n : n;
    Matrix id = Matrix::identity(m.dim(), m.field);
    Matrix cur = m.red_unit.compose(m.green_counit);
    for (int64_t i = 0; i < k; ++i) cur = m.red_mul.compose(cur.tensor(id)).compose(m.green_comul);
    if (n < 0) cur = cur.compose(m.antipode);
    return cur;
}

RingOps ring_ops(const GroupAlgebraModel &m, int64_t a, int64_t b) {
    Matrix A = internal_integer_matrix(m, a);
    Matrix B = internal_integer_matrix(m, b);
    RingOps ops;
    ops.sum = m.red_mul.compose(A.tensor(B)).compose(m.green_comul);
    ops.product = A.compose(B);
    return ops;
}

// --- Path-counting functor -------------------------------------------------

Matrix ha_to_matrix(const Diagram &d, std::optional<int64_t> modulus) {
    FieldDescriptor Q = FieldDescriptor::rationals();
    auto reduce = [&](const Rat &x) -> Rat {
        if (!modulus) return x;
        if (denominator(x) != 1) throw error("path count is not an integer");
        return Rat(imod(static_cast<int64_t>(numerator(x)), *modulus));
    };
    // rows over the inputs, one per wire
    std::map<EdgeId, std::vector<Rat>> row;
    size_t n_in = d.inputs.size();
    for (size_t i = 0; i < n_in; ++i) {
        std::vector<Rat> r(n_in, Rat(0));
        r[i] = 1;
        row[d.edges_at({d.inputs[i], 0}).at(0)] = r;
    }
    std::set<NodeId> remaining;
    for (const auto &[nid, nd] : d.nodes) {
        if (nd.type == NodeType::Boundary) continue;
        if (nd.type == NodeType::Green && (nd.m != 1 || nd.phase != 0))
            throw domain_error("non-copy green generator outside the HA fragment");
        if (nd.type == NodeType::Red && (nd.n != 1 || nd.phase != 0))
            throw domain_error("non-monoid red generator outside the HA fragment");
        remaining.insert(nid);
    }
    while (!remaining.empty()) {
        NodeId pick = -1;
        for (NodeId nid : remaining) {
            const Node &nd = d.node(nid);
            bool ready = true;
            for (int p = 0; p < nd.port_count() && ready; ++p)
                if (nd.port_is_input(p) && !row.count(d.edges_at({nid, p}).at(0))) ready = false;
            if (ready) {
                pick = nid;
                break;
            }
        }
        if (pick < 0) throw domain_error("cyclic diagram outside the HA fragment");
        const Node &nd = d.node(pick);
        std::vector<Rat> acc(n_in, Rat(0));
        for (int p = 0; p < nd.port_count(); ++p) {
            if (!nd.port_is_input(p)) continue;
            const auto &r = row.at(d.edges_at({pick, p}).at(0));
            for (size_t i = 0; i < n_in; ++i) acc[i] += r[i];
        }
        if (nd.type == NodeType::Antipode)
            for (auto &x : acc) x = -x;
        for (size_t i = 0; i < n_in; ++i) acc[i] = reduce(acc[i]);
        for (int p = 0; p < nd.port_count(); ++p)
            if (!nd.port_is_input(p)) row[d.edges_at({pick, p}).at(0)] = acc;
        remaining.erase(pick);
    }
    Matrix M(d.n_outputs(), static_cast<int64_t>(n_in), Q);
    for (int64_t j = 0; j < d.n_outputs(); ++j) {
        const auto &r = row.at(d.edges_at({d.outputs[j], 0}).at(0));
        for (size_t i = 0; i < n_in; ++i) M.at(j, static_cast<int64_t>(i)) = FieldScalar::from_rational(Q, reduce(r[i]));
    }
    return M;
}

// --- Classical action and ring structure -----------------------------------

Matrix classical_action(const GroupAlgebraModel &m, const GroupElement &k, const Matrix &alpha) {
    if (!is_phase(m, NodeType::Green, alpha)) throw domain_error("classical action needs a green phase");
    Matrix lam = m.red_phase(angle_of(m.basis_group, k));
    Matrix acted = lam.compose(alpha).compose(lam.dagger());
    if (!is_phase(m, NodeType::Green, acted)) throw error("classical action left the phase group");
    return acted;
}

CoprimalityReport coprimality_check(const GroupAlgebraModel &m, int64_t n) {
    CoprimalityReport rep;
    int64_t d = m.basis_group.exponent();
    rep.coprime = std::gcd(imod(n, d) == 0 ? d : imod(n, d), d) == 1 || d == 1;
    Matrix N = internal_integer_matrix(m, n);
    rep.red_comonoid_commutes = m.red_comul.compose(N) == N.tensor(N).compose(m.red_comul);
    rep.green_monoid_commutes = N.compose(m.green_mul) == m.green_mul.compose(N.tensor(N));
    return rep;
}

bool enough_setlike(const GroupAlgebraModel &m) {
    auto points = set_like(m, NodeType::Red);
    Matrix span(m.dim(), static_cast<int64_t>(points.size()), m.field);
    for (size_t j = 0; j < points.size(); ++j)
        for (int64_t i = 0; i < m.dim(); ++i) span.at(i, static_cast<int64_t>(j)) = points[j].at(i, 0);
    return span.rank() == m.dim();
}

} // namespace frob
