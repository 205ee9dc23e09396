#pragma once

#include <intlink/rational.hpp>
#include <intlink/errors.hpp>
#include <intlink/geometry.hpp>
#include <intlink/random.hpp>
#include <intlink/linking.hpp>
#include <intlink/graph.hpp>
#include <intlink/embedding.hpp>
#include <intlink/projection.hpp>
#include <intlink/invariants.hpp>
#include <intlink/generate.hpp>
#include <intlink/io.hpp>
#include <intlink/svg.hpp>
