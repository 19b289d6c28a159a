#!/usr/bin/env python3
# Copyright 2026 The cryptvault Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates src/blowfish_tables.cc from the hexadecimal expansion of pi."""

import sys

import mpmath

WORDS = 18 + 4 * 256

HEADER = """\
/*
 * Copyright 2026 The cryptvault Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Generated by tools/gen_pi_tables.py. Do not edit.

#include "blowfish_tables.h"

namespace cryptvault::blowfish::detail {
"""


def pi_words():
    digits = WORDS * 8
    mpmath.mp.prec = digits * 4 + 64
    frac = (mpmath.pi - 3) * mpmath.mpf(16) ** digits
    text = format(int(mpmath.floor(frac)), "x").rjust(digits, "0")
    return [text[i:i + 8] for i in range(0, digits, 8)]


def emit(name, words, out):
    out.write(f"\nconst std::array<std::uint32_t, {len(words)}> {name} = {{\n")
    for i in range(0, len(words), 4):
        row = ", ".join(f"0x{w.upper()}" for w in words[i:i + 4])
        out.write(f"    {row},\n")
    out.write("};\n")


def main():
    words = pi_words()
    out = sys.stdout
    out.write(HEADER)
    emit("kInitialP", words[:18], out)
    for box in range(4):
        start = 18 + 256 * box
        emit(f"kInitialS{box}", words[start:start + 256], out)
    out.write("\n}  // namespace cryptvault::blowfish::detail\n")


if __name__ == "__main__":
    main()
