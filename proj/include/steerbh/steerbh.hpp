#pragma once

#include "steerbh/closed_forms.hpp"
#include "steerbh/errors.hpp"
#include "steerbh/hawking.hpp"
#include "steerbh/output.hpp"
#include "steerbh/steering.hpp"
#include "steerbh/sweep.hpp"
#include "steerbh/symplectic.hpp"
