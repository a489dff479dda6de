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

#ifdef SENTPAR_WITH_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include "sentpar/translation.h"
#include "sentpar/text_io.h"

namespace sentpar {

std::string PercentEncode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
        (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 15]);
    }
  }
  return out;
}

HttpProvider::HttpProvider(std::string url_template, std::string auth_token,
                           std::chrono::milliseconds timeout)
    : auth_token_(std::move(auth_token)), timeout_(timeout) {
  std::size_t scheme_end = url_template.find("://");
  if (scheme_end == std::string::npos)
    throw ConfigError("provider URL needs a scheme: " + url_template);
  std::string scheme = url_template.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https")
    throw ConfigError("unsupported provider URL scheme: " + scheme);
#ifndef SENTPAR_WITH_OPENSSL
  if (scheme == "https")
    throw ConfigError("https provider URLs need a build with OpenSSL");
#endif
  std::size_t path_start = url_template.find('/', scheme_end + 3);
  if (path_start == std::string::npos) path_start = url_template.size();
  origin_ = url_template.substr(0, path_start);
  path_template_ = url_template.substr(path_start);
  if (path_template_.empty()) path_template_ = "/";
  if (url_template.find("{text}") == std::string::npos)
    throw ConfigError("provider URL template lacks a {text} placeholder");
}

std::string HttpProvider::Translate(std::string_view source) {
  std::string path = path_template_;
  std::string encoded = PercentEncode(source);
  for (std::size_t pos; (pos = path.find("{text}")) != std::string::npos;)
    path.replace(pos, 6, encoded);

  httplib::Client client(origin_);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  httplib::Headers headers;
  if (!auth_token_.empty())
    headers.emplace("Authorization", "Bearer " + auth_token_);
  httplib::Result res = client.Get(path, headers);
  if (!res)
    throw TranslationError("request failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw TranslationError("provider answered HTTP " + std::to_string(res->status));
  return std::string(Trim(res->body));
}

}  // namespace sentpar
