// tcgrwa.hpp - umbrella header

#pragma once

#include "tcgrwa/adiabatic.hpp"
#include "tcgrwa/dynamics.hpp"
#include "tcgrwa/eigensolver.hpp"
#include "tcgrwa/errors.hpp"
#include "tcgrwa/grwa.hpp"
#include "tcgrwa/hilbert.hpp"
#include "tcgrwa/models.hpp"
#include "tcgrwa/params.hpp"
#include "tcgrwa/specfun.hpp"
#include "tcgrwa/sweep.hpp"
