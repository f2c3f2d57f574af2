// SPDX-License-Identifier: Apache-2.0
//
// risfeed: simulator for near-field fed RIS beamforming antennas
// Copyright (C) 2026 The risfeed authors
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

#ifndef RISFEED_ERROR_HPP
#define RISFEED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace risfeed
{
    // All library failures derive from Error so callers can catch one type.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidScene : public Error
    {
    public:
        using Error::Error;
    };

    class DecompositionError : public Error
    {
    public:
        using Error::Error;
    };

    // Phase of the RIS compensation is undefined where |u_1[k]| vanishes.
    class DegenerateExcitation : public Error
    {
    public:
        using Error::Error;
    };

    class InsufficientModes : public Error
    {
    public:
        using Error::Error;
    };
}

#endif
