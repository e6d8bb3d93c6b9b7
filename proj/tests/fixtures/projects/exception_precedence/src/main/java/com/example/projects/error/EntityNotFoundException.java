package com.example.projects.error;

public class EntityNotFoundException extends RuntimeException {
}
