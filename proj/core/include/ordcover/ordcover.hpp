#pragma once

#include "ordcover/assignment.hpp"
#include "ordcover/block_design.hpp"
#include "ordcover/bounds.hpp"
#include "ordcover/cover_count.hpp"
#include "ordcover/error.hpp"
#include "ordcover/finite_field.hpp"
#include "ordcover/latin_squares.hpp"
#include "ordcover/oracle.hpp"
