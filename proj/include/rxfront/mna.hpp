// SPDX-License-Identifier: Apache-2.0
//
// rxfront - receiver front-end termination and noise analysis
// Copyright (C) 2026 The rxfront authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RXFRONT_MNA_HPP
#define RXFRONT_MNA_HPP

#include "rxfront/netcore.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

// Phasor modified nodal analysis for linear netlists built from impedances,
// independent voltage and current sources, and voltage-controlled voltage
// sources. Node "0" is ground.
//
// Text format, one element per line (blank lines and lines starting with
// '*' or '#' are ignored):
//
//   Z<name> <n+> <n-> <re_ohms> [im_ohms]     impedance; "inf" omits it
//   V<name> <n+> <n-> <re_volts> [im_volts]   v(n+) - v(n-) = V
//   I<name> <n+> <n-> <re_amps> [im_amps]     current flows n+ -> source -> n-
//   E<name> <n+> <n-> <c+> <c-> <gain>        v(n+) - v(n-) = gain (v(c+) - v(c-))
namespace rxfront::mna
{
    enum class ElementKind
    {
        impedance,
        voltage_source,
        current_source,
        vcvs
    };

    struct Element
    {
        ElementKind kind;
        std::string name;
        std::string pos, neg;
        std::string ctrl_pos, ctrl_neg; // vcvs only
        complex value;                  // ohms, volts, amperes or gain
    };

    class LinearNetlist
    {
    public:
        void add_impedance(std::string name, std::string pos, std::string neg, complex ohms);
        void add_voltage_source(std::string name, std::string pos, std::string neg, complex volts);
        void add_current_source(std::string name, std::string pos, std::string neg, complex amps);
        void add_vcvs(std::string name, std::string pos, std::string neg, std::string ctrl_pos,
                      std::string ctrl_neg, double gain);

        const std::vector<Element> &elements() const { return elements_; }

        static LinearNetlist parse(std::istream &in);
        static LinearNetlist parse(const std::string &text);

    private:
        void add(Element e);

        std::vector<Element> elements_;
    };

    struct ElementResult
    {
        std::string name;
        complex voltage; // v(pos) - v(neg)
        complex current; // flows into pos, through the element, out of neg
        double absorbed_power; // Re(V conj(I)) / 2, negative when delivering
    };

    struct MnaSolution
    {
        std::map<std::string, complex> node_voltages; // includes ground "0"
        std::vector<ElementResult> elements;
        double relative_residual = 0.0;

        complex voltage(const std::string &node) const;
        const ElementResult &element(const std::string &name) const;

        // |sum of absorbed power| / sum of |absorbed power|. Zero for an exact solution.
        double power_imbalance() const;
    };

    // Throws SingularCircuitError naming the node or branch most involved in the
    // singularity, and NumericalError if the assembled residual exceeds 1e-10.
    MnaSolution mna_solve(const LinearNetlist &netlist);
}

#endif
