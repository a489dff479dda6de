// Copyright 2026 The Sentpar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SENTPAR_TEXT_IO_H_
#define SENTPAR_TEXT_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace sentpar {

// Whole-file helpers. All corpus artifacts are UTF-8 text.
std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);
bool FileExists(const std::string &path);

// Splits on '\n', dropping one trailing '\r' per line. A final newline does
// not produce an extra empty line.
std::vector<std::string_view> SplitLines(std::string_view text);

std::vector<std::string_view> Split(std::string_view text, char sep);

std::string_view Trim(std::string_view s);

bool IsSpace(char c);

// Formats `value` with a fixed number of decimals ("12.15").
std::string FormatFixed(double value, int decimals);

}  // namespace sentpar

#endif  // SENTPAR_TEXT_IO_H_
