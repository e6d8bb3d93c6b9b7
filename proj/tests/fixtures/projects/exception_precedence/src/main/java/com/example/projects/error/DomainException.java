package com.example.projects.error;

public class DomainException extends RuntimeException {
    public DomainException(String message) {
        super(message);
    }
}
