/*
   Copyright 2026 The LGS Toolkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace lgs {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters, shapes or preconditions.
class ParamError : public Error {
 public:
  using Error::Error;
};

/// No codeword within the decoding radius, or the decoded word failed the
/// re-encoding check.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

/// A ciphertext decoded to a codeword outside the public subcode.
class InconsistentCiphertext : public Error {
 public:
  using Error::Error;
};

/// Malformed or unreadable key/ciphertext/config files.
class IOError : public Error {
 public:
  using Error::Error;
};

/// Rejection loops that ran out of their retry budget.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace lgs
