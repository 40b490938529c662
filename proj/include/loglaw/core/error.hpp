/*
   Copyright 2026 The loglaw Authors

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
#include <vector>

namespace loglaw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NumericDomainError : public Error {
public:
    using Error::Error;
};

/// A rejection sampler gave up; carries the observed acceptance rate.
class SamplingFailure : public Error {
public:
    SamplingFailure(const std::string& what, double acceptance_rate, long attempts)
        : Error(what), acceptance_rate_(acceptance_rate), attempts_(attempts) {}

    double acceptance_rate() const noexcept { return acceptance_rate_; }
    long attempts() const noexcept { return attempts_; }

private:
    double acceptance_rate_;
    long attempts_;
};

/// Fundamental-domain reduction exceeded its word-length cap.
class ReductionFailure : public Error {
public:
    ReductionFailure(const std::string& what, double re, double im, std::vector<int> partial_word)
        : Error(what), re_(re), im_(im), partial_word_(std::move(partial_word)) {}

    double re() const noexcept { return re_; }
    double im() const noexcept { return im_; }
    const std::vector<int>& partial_word() const noexcept { return partial_word_; }

private:
    double re_, im_;
    std::vector<int> partial_word_;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Configuration problem; key() names the offending entry.
class ConfigError : public Error {
public:
    ConfigError(const std::string& key, const std::string& what)
        : Error(key + ": " + what), key_(key) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace loglaw
