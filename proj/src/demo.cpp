#include "littlewood/demo.hpp"

#include <chrono>
#include <ostream>

#include "littlewood/sequences.hpp"

namespace littlewood {

namespace {

struct Line {
    std::string label;
    std::string summary;
    bool pass;
};

void print(std::ostream& os, const Line& line) {
    os << (line.pass ? "PASS " : "FAIL ") << line.label << ": " << line.summary << "\n";
}

}  // namespace

int run_demo(const VerifyOptions& opts, bool inject_mutation, std::ostream& os) {
    auto started = std::chrono::steady_clock::now();
    Interval universe = Interval::closed(0, 1);
    std::vector<Line> lines;

    {  // fourth principle on 1/x over (0,1]
        auto f = std::make_shared<ReciprocalRamp>(Rational(0), Rational(1),
                                                  Interval{Rational(0), Rational(1), false, true},
                                                  universe);
        BoundednessCert cert = fourth_principle(*f, Rational(1, 10));
        VerificationReport report = verify_boundedness(cert, *f, opts);
        lines.push_back({"fourth_principle 1/x on (0,1]",
                         "bound = " + rat_to_string(cert.bound) + ", K = " + cert.K.to_string() +
                             ", loss = " + rat_to_string(cert.loss),
                         report.verdict()});
    }
    {  // Egoroff, classical path
        PointwiseSequence seq = make_family("ramp_spike", universe);
        EgoroffCert cert = egoroff_classical(seq, Rational(1, 10), 4);
        if (inject_mutation) cert.index_table[1] -= 1;  // nu(2): 41 -> 40
        VerificationReport report = verify_egoroff(cert, seq, opts);
        std::string table;
        for (int nu : cert.index_table) table += (table.empty() ? "" : ",") + std::to_string(nu);
        lines.push_back({"egoroff_classical ramp_spike",
                         "nu = [" + table + "], loss = " + rat_to_string(cert.loss),
                         report.verdict()});
    }
    {  // Egoroff, Dini path
        PointwiseSequence seq = make_family("ramp_spike", universe);
        EgoroffCert cert = egoroff_dini(seq, Rational(1, 10), 4);
        VerificationReport report = verify_egoroff(cert, seq, opts);
        std::string table;
        for (int nu : cert.index_table) table += (table.empty() ? "" : ",") + std::to_string(nu);
        lines.push_back({"egoroff_dini ramp_spike",
                         "nu = [" + table + "], loss = " + rat_to_string(cert.loss),
                         report.verdict()});
    }
    {  // Lusin on a two-piece step function
        IntervalSet left = IntervalSet::single(Interval{Rational(0), Rational(1, 2), true, false},
                                               universe);
        IntervalSet right = IntervalSet::single(Interval::closed(Rational(1, 2), Rational(1)),
                                                universe);
        auto f = std::make_shared<StepFunction>(std::vector<StepPiece>{
            {left, ExtendedRational(0)}, {right, ExtendedRational(1)}});
        LusinCert cert = lusin(f, Rational(1, 10));
        VerificationReport report = verify_lusin(cert, f, opts);
        const auto& w = std::get<LusinWitnessExact>(cert.witness);
        std::string gaps;
        for (const Rational& g : w.gaps) gaps += (gaps.empty() ? "" : ",") + rat_to_string(g);
        lines.push_back({"lusin two-piece step",
                         "loss = " + rat_to_string(cert.loss) + ", gaps = [" + gaps + "]",
                         report.verdict()});
    }
    {  // Dini index of x/n on [0,1]
        PointwiseSequence seq = make_family("x_over_n", universe);
        IntervalSet k = IntervalSet::whole(universe);
        auto terms = [&seq](int n) { return seq.term(n); };
        DiniCert by_sup = dini_index(terms, seq.limit(), k, Rational(1, 10), DiniAlgorithm::sup);
        DiniCert by_cover = dini_index(terms, seq.limit(), k, Rational(1, 10), DiniAlgorithm::cover);
        VerificationReport report = verify_dini(by_sup, terms, seq.limit(), opts);
        bool agree = by_sup.index == by_cover.index;
        lines.push_back({"dini_index x/n on [0,1]",
                         "index = " + std::to_string(by_sup.index) + " (sup) / " +
                             std::to_string(by_cover.index) + " (cover)",
                         report.verdict() && agree});
    }

    bool all = true;
    for (const Line& line : lines) {
        print(os, line);
        all = all && line.pass;
    }
    auto ended = std::chrono::steady_clock::now();
    os << (all ? "all principles verified" : "verification failures above") << " ("
       << std::chrono::duration_cast<std::chrono::milliseconds>(ended - started).count()
       << " ms)\n";
    return all ? 0 : 1;
}

}  // namespace littlewood
