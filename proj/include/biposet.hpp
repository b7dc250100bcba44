#pragma once

#include "biposet/core.hpp"
#include "biposet/axioms.hpp"
#include "biposet/constructions.hpp"
#include "biposet/extremal.hpp"
#include "biposet/morphisms.hpp"
#include "biposet/galois.hpp"
#include "biposet/io.hpp"
#include "biposet/oracle.hpp"
