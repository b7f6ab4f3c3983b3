#include "dualgap/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace dualgap {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson rational_map_to_json(const std::map<Rational, Int>& m) {
    OrderedJson out = OrderedJson::array();
    for (const auto& [k, v] : m) out.push_back({k.str(), v.get_str()});
    return out;
}

std::map<Rational, Int> rational_map_from_json(const OrderedJson& j) {
    std::map<Rational, Int> out;
    for (const auto& row : j) out.emplace(Rational::parse(row.at(0).get<std::string>()), Int(row.at(1).get<std::string>()));
    return out;
}

OrderedJson int_vector_to_json(const std::vector<Int>& v) {
    OrderedJson out = OrderedJson::array();
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

std::vector<Int> int_vector_from_json(const OrderedJson& j) {
    std::vector<Int> out;
    for (const auto& x : j) out.emplace_back(x.get<std::string>());
    return out;
}

std::map<Rational, Int> distribution_of(const UnivariatePoly& poly) {
    std::map<Rational, Int> out;
    for (const auto& [e, c] : poly.terms()) out.emplace(Rational(e), c);
    return out;
}

};  // namespace

FiniteField Certificate::build_field() const {
    std::optional<std::vector<long>> mod;
    if (!modulus.empty()) mod = modulus;
    std::optional<std::vector<long>> a;
    if (!alpha.empty()) a = alpha;
    return FiniteField::build(p, l, mod, a);
}

FieldWeight Certificate::build_weight(const FiniteField& f) const {
    return FieldWeight::from_coset_values(f, coset_values);
}

std::string Certificate::to_json() const {
    OrderedJson j;
    j["p"] = p;
    j["l"] = l;
    j["modulus"] = modulus;
    j["alpha"] = alpha;
    OrderedJson cv = OrderedJson::array();
    for (const auto& v : coset_values) cv.push_back(v.str());
    j["coset_values"] = cv;
    j["subset_s"] = subset_s;
    j["subset_s_prime"] = subset_s_prime;
    j["case_tag"] = case_tag;
    j["rho"] = rho.str();
    j["scaling"] = scaling.get_str();
    j["length"] = length.get_str();
    j["mult_c"] = int_vector_to_json(mult_c);
    j["mult_d"] = int_vector_to_json(mult_d);
    j["wwe_c"] = rational_map_to_json(wwe_c);
    j["wwe_d"] = rational_map_to_json(wwe_d);
    j["doubleton_count_c"] = doubleton_count_c.get_str();
    j["doubleton_count_d"] = doubleton_count_d.get_str();
    j["witness_weight"] = witness_weight.str();
    j["witness_count_c"] = witness_count_c.get_str();
    j["witness_count_d"] = witness_count_d.get_str();
    j["witness_method"] = witness_method;
    if (dual_wwe_c) j["dual_wwe_c"] = rational_map_to_json(*dual_wwe_c);
    if (dual_wwe_d) j["dual_wwe_d"] = rational_map_to_json(*dual_wwe_d);
    return j.dump(2) + "\n";
}

Certificate Certificate::from_json(const std::string& text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("certificate: bad JSON: ") + e.what());
    }
    try {
        Certificate c;
        c.p = j.at("p").get<long>();
        c.l = j.at("l").get<int>();
        c.modulus = j.at("modulus").get<std::vector<long>>();
        c.alpha = j.at("alpha").get<std::vector<long>>();
        for (const auto& v : j.at("coset_values")) c.coset_values.push_back(Rational::parse(v.get<std::string>()));
        c.subset_s = j.at("subset_s").get<std::vector<long>>();
        c.subset_s_prime = j.at("subset_s_prime").get<std::vector<long>>();
        c.case_tag = j.at("case_tag").get<int>();
        c.rho = Rational::parse(j.at("rho").get<std::string>());
        c.scaling = Int(j.at("scaling").get<std::string>());
        c.length = Int(j.at("length").get<std::string>());
        c.mult_c = int_vector_from_json(j.at("mult_c"));
        c.mult_d = int_vector_from_json(j.at("mult_d"));
        c.wwe_c = rational_map_from_json(j.at("wwe_c"));
        c.wwe_d = rational_map_from_json(j.at("wwe_d"));
        c.doubleton_count_c = Int(j.at("doubleton_count_c").get<std::string>());
        c.doubleton_count_d = Int(j.at("doubleton_count_d").get<std::string>());
        c.witness_weight = Rational::parse(j.at("witness_weight").get<std::string>());
        c.witness_count_c = Int(j.at("witness_count_c").get<std::string>());
        c.witness_count_d = Int(j.at("witness_count_d").get<std::string>());
        c.witness_method = j.at("witness_method").get<std::string>();
        if (j.contains("dual_wwe_c")) c.dual_wwe_c = rational_map_from_json(j.at("dual_wwe_c"));
        if (j.contains("dual_wwe_d")) c.dual_wwe_d = rational_map_from_json(j.at("dual_wwe_d"));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("certificate: missing or malformed field: ") + e.what());
    }
}

std::vector<std::vector<FieldElem>> expand_generator(const OrbitFrame& frame, const std::vector<Int>& multiplicity) {
    Int total = 0;
    for (const auto& m : multiplicity) total += m;
    if (!total.fits_slong_p() || total.get_si() > 1000000) {
        throw CapExceededError("expand_generator: code too long to expand");
    }
    std::vector<std::vector<FieldElem>> rows(2);
    for (size_t i = 0; i < multiplicity.size(); ++i) {
        const long count = multiplicity[i].get_si();
        for (long c = 0; c < count; ++c) {
            rows[0].push_back(frame.reps()[i].x0);
            rows[1].push_back(frame.reps()[i].x1);
        }
    }
    return rows;
}

Certificate build_certificate(const FieldWeight& w, const BuildOptions& options) {
    const FiniteField& f = w.field();
    const auto hyp = main_theorem_hypotheses(w);
    if (!options.force) {
        if (!hyp.integer_valued) throw HypothesisError("construction requires an integer-valued weight");
        if (!hyp.all_hold()) throw HypothesisError("hypothesis failed: " + hyp.first_failure());
    }
    if (!hyp.nondegenerate) throw HypothesisError("hypothesis failed: " + hyp.first_failure());

    const OrbitFrame frame(f, w.coset_count());
    const OrbitMatrix weight_matrix = weight_orbit_matrix(frame, w);
    auto [inv_fn, winv] = invert_orbit_matrix(frame, w.invariant());

    SubsetChoice choice;
    if (options.subset_s || options.subset_s_prime) {
        if (!options.subset_s || !options.subset_s_prime) {
            throw DomainError("construction: both subsets must be overridden together");
        }
        if (options.subset_s->size() != options.subset_s_prime->size() || options.subset_s->empty()) {
            throw DomainError("construction: overridden subsets must be nonempty and of equal size");
        }
        choice.s = *options.subset_s;
        choice.s_prime = *options.subset_s_prime;
        choice.case_tag = 0;
    } else {
        choice = select_subsets(winv);
    }

    const auto sol_c = solve_multiplicity(winv, choice.s);
    const auto sol_d = solve_multiplicity(winv, choice.s_prime);
    const Quadratic fq = rho_polynomial(sol_c, sol_d, winv);
    if (hyp.all_hold() && choice.case_tag >= 1 && choice.case_tag <= 2 && fq.is_zero()) {
        throw InternalError("construction: difference quadratic vanished under the strict hypotheses");
    }

    const auto interval = nonnegativity_interval(winv, static_cast<int>(choice.s.size()));

    Rational rho;
    if (options.rho) {
        rho = *options.rho;
        if (rho.sign() <= 0) throw DomainError("construction: rho must be positive");
    } else if (!fq.is_zero()) {
        rho = choose_rho(interval.lo, interval.hi, fq);
    } else {
        rho = interval.lo;
    }

    const ExactVector eta_c = sol_c.eval(rho);
    const ExactVector eta_d = sol_d.eval(rho);

    // sanity: the solutions really hit the two-valued targets
    const ExactVector omega_c = weight_matrix.matrix() * eta_c;
    if (!linalg::equal(omega_c, two_valued_targets(frame, choice.s, rho))) {
        throw InternalError("construction: W * eta misses the target orbit weights");
    }

    const ScaledPair scaled = scale_to_integers(eta_c, eta_d);

    const auto dist_c = weight_distribution(frame, scaled.mult_c, weight_matrix);
    const auto dist_d = weight_distribution(frame, scaled.mult_d, weight_matrix);
    if (dist_c != dist_d) throw InternalError("construction: primal enumerators differ");

    for (const auto& mult : {scaled.mult_c, scaled.mult_d}) {
        const auto check = egalitarian_check(frame, w, mult, dist_c);
        if (!check.holds) throw InternalError("construction: egalitarian identity failed");
    }

    Certificate cert;
    cert.p = f.p();
    cert.l = f.degree();
    cert.modulus = f.modulus();
    cert.alpha = f.coeffs(f.alpha());
    for (int i = 0; i < w.coset_count(); ++i) cert.coset_values.push_back(w.coset_value(i));
    cert.subset_s = choice.s;
    cert.subset_s_prime = choice.s_prime;
    cert.case_tag = choice.case_tag;
    cert.rho = rho;
    cert.scaling = scaled.scaling;
    cert.length = scaled.length;
    cert.mult_c = scaled.mult_c;
    cert.mult_d = scaled.mult_d;
    cert.wwe_c = dist_c;
    cert.wwe_d = dist_d;

    cert.doubleton_count_c = doubleton_dual_count(frame, w, scaled.mult_c);
    cert.doubleton_count_d = doubleton_dual_count(frame, w, scaled.mult_d);

    std::optional<std::pair<UnivariatePoly, UnivariatePoly>> dual_polys;
    auto compute_duals = [&]() {
        if (dual_polys) return;
        const auto k = kravchuk(frame);
        const Int code_size = Int(f.q()) * Int(f.q());
        const auto se_c = symmetrized_enumerator(frame, scaled.mult_c);
        const auto se_d = symmetrized_enumerator(frame, scaled.mult_d);
        // primal cross-check along the way
        if (distribution_of(specialize_to_wwe(se_c, w)) != dist_c) {
            throw InternalError("construction: enumerator route disagrees with the distribution route");
        }
        dual_polys = std::make_pair(
            specialize_to_wwe(macwilliams_transform(se_c, k, code_size, options.limits), w),
            specialize_to_wwe(macwilliams_transform(se_d, k, code_size, options.limits), w));
    };

    if (cert.doubleton_count_c != cert.doubleton_count_d) {
        cert.witness_method = "doubleton";
        cert.witness_weight = w.min_positive() * Rational(2);
        cert.witness_count_c = cert.doubleton_count_c;
        cert.witness_count_d = cert.doubleton_count_d;
    } else {
        bool found = false;
        if (w.coset_count() == 2) {
            std::vector<Rational> vals = {w.coset_value(0), w.coset_value(1)};
            std::sort(vals.begin(), vals.end());
            if (vals[0] == Rational(2) && vals[1] == Rational(3)) {
                const Int cc = cross_coset_dual_count(frame, w, scaled.mult_c);
                const Int cd = cross_coset_dual_count(frame, w, scaled.mult_d);
                if (cc != cd) {
                    cert.witness_method = "cross-coset";
                    cert.witness_weight = Rational(5);
                    cert.witness_count_c = cc;
                    cert.witness_count_d = cd;
                    found = true;
                }
            }
        }
        if (!found) {
            compute_duals();
            const auto& [pc, pd] = *dual_polys;
            for (const auto& [e, c] : pc.terms()) {
                const Int* other = pd.coefficient(e);
                if (!other || *other != c) {
                    cert.witness_method = "transform";
                    cert.witness_weight = Rational(e);
                    cert.witness_count_c = c;
                    cert.witness_count_d = other ? *other : Int(0);
                    found = true;
                    break;
                }
            }
            if (!found) {
                for (const auto& [e, c] : pd.terms()) {
                    if (!pc.coefficient(e)) {
                        cert.witness_method = "transform";
                        cert.witness_weight = Rational(e);
                        cert.witness_count_c = 0;
                        cert.witness_count_d = c;
                        found = true;
                        break;
                    }
                }
            }
        }
        if (!found) {
            throw HypothesisError(
                "construction: the dual enumerators agree at every computed weight; no duality violation witnessed");
        }
    }

    if (options.full_dual) {
        compute_duals();
        cert.dual_wwe_c = distribution_of(dual_polys->first);
        cert.dual_wwe_d = distribution_of(dual_polys->second);
        // the closed-form counts must match the transform coefficients
        const Rational two_min = w.min_positive() * Rational(2);
        auto coefficient_at = [](const std::map<Rational, Int>& m, const Rational& k) {
            auto it = m.find(k);
            return it == m.end() ? Int(0) : it->second;
        };
        if (coefficient_at(*cert.dual_wwe_c, two_min) != cert.doubleton_count_c ||
            coefficient_at(*cert.dual_wwe_d, two_min) != cert.doubleton_count_d) {
            throw InternalError("construction: doubleton counts disagree with the transform");
        }
    }
    return cert;
}

std::string VerifyReport::first_failure() const {
    for (const auto& line : lines) {
        if (!line.ok && !line.skipped) return line.check + ": " + line.detail;
    }
    return "";
}

VerifyReport verify_certificate(const Certificate& cert, const VerifyOptions& options) {
    VerifyReport report;
    auto add = [&](const std::string& check, bool ok, const std::string& detail = "") {
        report.lines.push_back({check, ok, false, detail});
    };
    auto skip = [&](const std::string& check, const std::string& why) {
        report.lines.push_back({check, true, true, why});
    };

    const FiniteField f = cert.build_field();
    const FieldWeight w = cert.build_weight(f);
    const OrbitFrame frame(f, w.coset_count());
    const OrbitMatrix weight_matrix = weight_orbit_matrix(frame, w);
    const long tau = frame.rep_count();

    if (static_cast<long>(cert.mult_c.size()) != tau || static_cast<long>(cert.mult_d.size()) != tau) {
        add("multiplicity-shape", false, "multiplicity vectors do not match the frame size");
        report.pass = false;
        return report;
    }
    bool nonneg = true;
    Int len_c = 0, len_d = 0;
    for (const auto& m : cert.mult_c) {
        nonneg = nonneg && m >= 0;
        len_c += m;
    }
    for (const auto& m : cert.mult_d) {
        nonneg = nonneg && m >= 0;
        len_d += m;
    }
    add("multiplicity-nonnegative", nonneg);
    add("lengths-equal", len_c == len_d && len_c == cert.length,
        len_c.get_str() + " vs " + len_d.get_str() + " vs claimed " + cert.length.get_str());

    const auto dist_c = weight_distribution(frame, cert.mult_c, weight_matrix);
    const auto dist_d = weight_distribution(frame, cert.mult_d, weight_matrix);
    add("primal-enumerators-equal", dist_c == dist_d);
    add("stored-primal-match", dist_c == cert.wwe_c && dist_d == cert.wwe_d);

    for (const auto& [label, mult, dist] :
         {std::tuple{"egalitarian-c", &cert.mult_c, &dist_c}, std::tuple{"egalitarian-d", &cert.mult_d, &dist_d}}) {
        const auto check = egalitarian_check(frame, w, *mult, *dist);
        add(label, check.holds);
    }

    Int count_c = 0, count_d = 0;
    try {
        count_c = doubleton_dual_count(frame, w, cert.mult_c);
        count_d = doubleton_dual_count(frame, w, cert.mult_d);
        add("doubleton-counts-match",
            count_c == cert.doubleton_count_c && count_d == cert.doubleton_count_d,
            count_c.get_str() + "/" + count_d.get_str());
    } catch (const DomainError& e) {
        skip("doubleton-counts-match", e.what());
    }

    // witness re-derivation
    if (cert.witness_method == "doubleton") {
        add("witness", count_c == cert.witness_count_c && count_d == cert.witness_count_d && count_c != count_d,
            "doubleton counts " + count_c.get_str() + " vs " + count_d.get_str());
    } else if (cert.witness_method == "cross-coset") {
        try {
            const Int cc = cross_coset_dual_count(frame, w, cert.mult_c);
            const Int cd = cross_coset_dual_count(frame, w, cert.mult_d);
            add("witness", cc == cert.witness_count_c && cd == cert.witness_count_d && cc != cd,
                "cross-coset counts " + cc.get_str() + " vs " + cd.get_str());
        } catch (const DomainError& e) {
            add("witness", false, e.what());
        }
    } else if (cert.witness_method == "transform") {
        skip("witness", "transform witness checked by the transform cross-check below");
    } else {
        add("witness", false, "unknown witness method '" + cert.witness_method + "'");
    }

    // brute-force cross-check
    const Int q(f.q());
    bool brute_ran = false;
    if (cert.length.fits_slong_p() && cert.length >= 2) {
        Int dual_size = 1;
        bool under = true;
        for (long i = 2; under && i < cert.length.get_si(); ++i) {
            dual_size *= q;
            under = dual_size <= options.brute_force_cap;
        }
        if (under) {
            brute_ran = true;
            const auto dual_c = brute_force_dual(f, expand_generator(frame, cert.mult_c), w, options.brute_force_cap);
            const auto dual_d = brute_force_dual(f, expand_generator(frame, cert.mult_d), w, options.brute_force_cap);
            auto at = [](const std::map<Rational, Int>& m, const Rational& k) {
                auto it = m.find(k);
                return it == m.end() ? Int(0) : it->second;
            };
            bool brute_ok = at(dual_c, cert.witness_weight) == cert.witness_count_c &&
                            at(dual_d, cert.witness_weight) == cert.witness_count_d;
            if (cert.dual_wwe_c) brute_ok = brute_ok && dual_c == *cert.dual_wwe_c;
            if (cert.dual_wwe_d) brute_ok = brute_ok && dual_d == *cert.dual_wwe_d;
            add("brute-force-duals", brute_ok);
        }
    }
    if (!brute_ran) skip("brute-force-duals", "dual space exceeds the cap");

    // transform cross-check
    try {
        const auto k = kravchuk(frame);
        const Int code_size = q * q;
        const auto dual_poly_c =
            specialize_to_wwe(macwilliams_transform(symmetrized_enumerator(frame, cert.mult_c), k, code_size,
                                                    options.limits),
                              w);
        const auto dual_poly_d =
            specialize_to_wwe(macwilliams_transform(symmetrized_enumerator(frame, cert.mult_d), k, code_size,
                                                    options.limits),
                              w);
        const auto dc = distribution_of(dual_poly_c);
        const auto dd = distribution_of(dual_poly_d);
        auto at = [](const std::map<Rational, Int>& m, const Rational& key) {
            auto it = m.find(key);
            return it == m.end() ? Int(0) : it->second;
        };
        bool ok = at(dc, cert.witness_weight) == cert.witness_count_c &&
                  at(dd, cert.witness_weight) == cert.witness_count_d &&
                  at(dc, cert.witness_weight) != at(dd, cert.witness_weight);
        if (cert.dual_wwe_c) ok = ok && dc == *cert.dual_wwe_c;
        if (cert.dual_wwe_d) ok = ok && dd == *cert.dual_wwe_d;
        add("transform-duals", ok);
    } catch (const CapExceededError& e) {
        skip("transform-duals", e.what());
    }

    report.pass = std::all_of(report.lines.begin(), report.lines.end(),
                              [](const VerifyLine& l) { return l.ok || l.skipped; });
    return report;
}

}  // namespace dualgap
