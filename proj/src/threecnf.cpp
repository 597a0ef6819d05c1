#include "satkit/threecnf.hpp"

namespace satkit {

ThreeCnfResult to_3cnf(const CnfFormula& f) {
    f.validate();
    ThreeCnfResult out;
    out.original_num_vars = f.num_vars;
    out.formula.num_vars = f.num_vars;
    out.fresh_vars.resize(f.clauses.size());

    auto fresh = [&](std::size_t clause_index) {
        int z = ++out.formula.num_vars;
        out.fresh_vars[clause_index].push_back(z);
        return z;
    };
    auto emit = [&](Clause c) { out.formula.clauses.push_back(std::move(c)); };

    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const Clause& c = f.clauses[ci];
        const std::size_t m = c.size();
        if (m == 0) {
            throw InvalidInput("clause " + std::to_string(ci) +
                               " is empty: input unsatisfiable as given");
        }
        if (m == 1) {
            const Literal a = c[0];
            const int z1 = fresh(ci);
            const int z2 = fresh(ci);
            emit({a, Literal::pos(z1), Literal::pos(z2)});
            emit({a, Literal::neg(z1), Literal::pos(z2)});
            emit({a, Literal::pos(z1), Literal::neg(z2)});
            emit({a, Literal::neg(z1), Literal::neg(z2)});
        } else if (m == 2) {
            const int z = fresh(ci);
            emit({c[0], c[1], Literal::pos(z)});
            emit({c[0], c[1], Literal::neg(z)});
        } else if (m == 3) {
            emit(c);
        } else {
            std::vector<int> z(m - 3);
            for (auto& zi : z) zi = fresh(ci);
            emit({c[0], c[1], Literal::pos(z[0])});
            for (std::size_t i = 1; i + 3 < m; ++i) {
                emit({Literal::neg(z[i - 1]), c[i + 1], Literal::pos(z[i])});
            }
            emit({Literal::neg(z[m - 4]), c[m - 2], c[m - 1]});
        }
    }
    return out;
}

Assignment project_witness(const ThreeCnfResult& r, const Assignment& a3) {
    if (evaluate(r.formula, a3) != Truth::True) {
        throw InvalidInput("assignment is not a model of the 3-CNF formula");
    }
    return a3.restricted(r.original_num_vars);
}

}  // namespace satkit
